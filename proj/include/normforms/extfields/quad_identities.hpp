// Symbolic verification that the norm from a quadratic extension K = F(s),
// s^2 = e, of a represented value of the norm form of F(alpha) is again a
// represented value, with the explicit sigma-invariant coordinate vector.
//
// Two minimal-polynomial shapes are supported: x^d = c and x^d = b x + c.
// Everything is generic over the coefficient ring, so the same construction
// runs exactly (SparsePoly over the rationals in the symbols b, c, e, u_i,
// v_i) and probabilistically (ModP evaluation at random points).
#pragma once

#include <string>
#include <vector>

#include "normforms/exactalg/identity.hpp"
#include "normforms/exactalg/quotient.hpp"
#include "normforms/exactalg/sparsepoly.hpp"
#include "normforms/report.hpp"

namespace normforms::extfields {

using exactalg::ModP;
using exactalg::ProbabilisticConfig;
using exactalg::QuadExt;
using exactalg::QuotientExt;
using exactalg::Ring;
using exactalg::SparsePoly;

// Entries A_0..A_{2d-2} of the coefficient collection of z * sigma(z): the
// even entries gather products z_i sigma(z_j) with i + j fixed below the
// degree, the odd entries the overflow products folded down by the minimal
// polynomial. Every entry is sigma-invariant; a nonzero s-component would be
// an internal error and throws.
template <Ring R>
std::vector<R> sigma_symmetric_entries(const std::vector<QuadExt<R>>& z) {
  const std::size_t d = z.size();
  std::vector<QuadExt<R>> a(2 * d - 1, z[0].zero_like());
  for (std::size_t t = 0; t < 2 * d - 1; ++t) {
    std::size_t pair_sum = (t % 2 == 0) ? t / 2 : d + (t - 1) / 2;
    for (std::size_t i = 0; i < d; ++i) {
      if (pair_sum < i || pair_sum - i >= d) continue;
      a[t] = a[t] + z[i] * z[pair_sum - i].conj();
    }
  }
  std::vector<R> out;
  out.reserve(a.size());
  for (const auto& x : a) {
    if (!x.b.is_zero()) throw std::logic_error("sigma-symmetric entry has an s-component");
    out.push_back(x.a);
  }
  return out;
}

// The represented-vector of the identity: length-d coordinates over F built
// from the A-list, for minimal polynomial x^d - c (and, when b is supplied,
// x^d - b x - c).
template <Ring R>
std::vector<R> represented_vector(const std::vector<R>& a, const R& c, const R* b) {
  const std::size_t d = (a.size() + 1) / 2;
  std::vector<R> v;
  v.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    R entry = a[2 * k];
    if (k + 1 < d) entry = entry + c * a[2 * k + 1];
    if (b != nullptr) {
      if (k >= 1 && k + 1 < d) entry = entry + (*b) * a[2 * k - 1];
      if (k + 1 == d) entry = entry + (*b) * a[2 * d - 3];
    }
    v.push_back(entry);
  }
  return v;
}

// Monic minimal polynomial x^d - c or x^d - b x - c with coefficients in R.
template <Ring R>
std::vector<R> binomial_minpoly(unsigned d, const R& c, const R* b) {
  std::vector<R> m(d + 1, c.zero_like());
  m[0] = -c;
  if (b != nullptr) m[1] = -(*b);
  m[d] = c.one_like();
  return m;
}

// Both sides of the identity over any coefficient ring. z_i = u_i + v_i s.
template <Ring R>
struct QuadIdentitySides {
  R lhs;                 // N_{K/F}(N_{K(alpha)/K}(z))
  std::vector<R> vec;    // the sigma-invariant coordinate vector
  R rhs;                 // norm form applied to the vector
};

template <Ring R>
QuadIdentitySides<R> quad_identity_sides(const std::vector<QuadExt<R>>& z, const R& c, const R* b) {
  const unsigned d = static_cast<unsigned>(z.size());
  QuadIdentitySides<R> out{c.zero_like(), {}, c.zero_like()};

  // LHS: norm of z over K(alpha)/K, then the quadratic norm down to F.
  std::vector<QuadExt<R>> mq;
  {
    QuadExt<R> cq = QuadExt<R>::scalar(c, z[0].s2);
    QuadExt<R> bq = b ? QuadExt<R>::scalar(*b, z[0].s2) : cq.zero_like();
    for (auto& coeff : binomial_minpoly<QuadExt<R>>(d, cq, b ? &bq : nullptr)) mq.push_back(coeff);
  }
  QuotientExt<QuadExt<R>> upstairs(mq);
  QuadExt<R> w = upstairs.norm(std::vector<QuadExt<R>>(z.begin(), z.end()));
  out.lhs = w.norm();

  // RHS: the vector, then the norm form of F(alpha) applied to it.
  std::vector<R> a = sigma_symmetric_entries(z);
  out.vec = represented_vector(a, c, b);
  QuotientExt<R> downstairs(binomial_minpoly<R>(d, c, b));
  out.rhs = downstairs.norm(out.vec);
  return out;
}

struct QuadIdentitySpec {
  unsigned d = 2;
  bool shifted = false;            // minimal polynomial x^d - b x - c
  bool specialize_b_zero = false;  // run the shifted engine with b fixed to 0
};

// Exact verification in Q[b?, c, e, u_1..u_d, v_1..v_d].
VerifyReport verify_quad_identity_exact(const QuadIdentitySpec& spec);

// Randomized verification modulo cfg.prime.
VerifyReport verify_quad_identity_probabilistic(const QuadIdentitySpec& spec,
                                                const ProbabilisticConfig& cfg);

// The exact symbolic vector entries (for reports, tests and LaTeX output).
std::vector<SparsePoly> quad_identity_vector_polys(const QuadIdentitySpec& spec);

// Degree bound used for the randomized failure bound.
unsigned quad_identity_degree_bound(unsigned d);

}  // namespace normforms::extfields
