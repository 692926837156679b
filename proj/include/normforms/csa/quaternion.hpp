// Quaternion algebras (a,b/F): generic arithmetic over any coefficient ring,
// reduced norms, matrices over the algebra with their norm-determinant via
// row reduction over the division ring, and the explicit norm identities for
// quadratic extension scalars.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "normforms/exactalg/identity.hpp"
#include "normforms/exactalg/matrix.hpp"
#include "normforms/exactalg/quotient.hpp"
#include "normforms/extfields/simple_ext.hpp"
#include "normforms/report.hpp"

namespace normforms::csa {

using exactalg::Matrix;
using exactalg::QuadExt;
using exactalg::Rat;
using exactalg::Ring;
using exactalg::Value;

// t + x i + y j + z k with i^2 = pa, j^2 = pb, k = ij = -ji.
template <Ring R>
struct Quat {
  R t, x, y, z;
  R pa, pb;

  Quat(R t_, R x_, R y_, R z_, R pa_, R pb_)
      : t(std::move(t_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)), pa(std::move(pa_)), pb(std::move(pb_)) {}

  static Quat scalar(const R& s, const R& pa, const R& pb) {
    return Quat(s, s.zero_like(), s.zero_like(), s.zero_like(), pa, pb);
  }

  bool is_zero() const { return t.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  Quat zero_like() const { return scalar(t.zero_like(), pa, pb); }
  Quat one_like() const { return scalar(t.one_like(), pa, pb); }

  Quat conj() const { return Quat(t, -x, -y, -z, pa, pb); }
  R nrd() const { return t * t - pa * (x * x) - pb * (y * y) + pa * pb * (z * z); }
  R trd() const { return t + t; }

  Quat operator-() const { return Quat(-t, -x, -y, -z, pa, pb); }
  friend Quat operator+(const Quat& p, const Quat& q) {
    return Quat(p.t + q.t, p.x + q.x, p.y + q.y, p.z + q.z, p.pa, p.pb);
  }
  friend Quat operator-(const Quat& p, const Quat& q) { return p + (-q); }
  friend Quat operator*(const Quat& p, const Quat& q) {
    const R& a = p.pa;
    const R& b = p.pb;
    return Quat(p.t * q.t + a * (p.x * q.x) + b * (p.y * q.y) - a * b * (p.z * q.z),
                p.t * q.x + p.x * q.t + b * (p.z * q.y - p.y * q.z),
                p.t * q.y + p.y * q.t + a * (p.x * q.z - p.z * q.x),
                p.t * q.z + p.z * q.t + p.x * q.y - p.y * q.x, a, b);
  }
  friend bool operator==(const Quat& p, const Quat& q) {
    return p.t == q.t && p.x == q.x && p.y == q.y && p.z == q.z && p.pa == q.pa && p.pb == q.pb;
  }
  friend bool operator!=(const Quat& p, const Quat& q) { return !(p == q); }

  Quat scaled(const R& c) const { return Quat(t * c, x * c, y * c, z * c, pa, pb); }
};

using QuatQ = Quat<Value>;
using QuatMatrix = Matrix<QuatQ>;

QuatQ quat_inv(const QuatQ& q);

// Division certificate for (a,b/Q). Negative parameters give a definite norm
// form; otherwise a bounded search for small rational zeros runs, and
// acceptance-scale runs may declare the algebra division explicitly.
struct DivisionCert {
  Rat a, b;
  bool certified = false;
  std::string method;  // "definite" | "bounded-search" | "declared" | "zero-found"
  std::uint64_t searched_height = 0;
  std::vector<Rat> isotropy_witness;  // nonzero zero of <1,-a,-b,ab> if found
};

DivisionCert certify_division(const Rat& a, const Rat& b, std::uint64_t height_bound = 1000,
                              std::uint64_t eval_budget = 10000000, bool declared = false);

enum class PivotOrder { FirstNonzero, LastNonzero };

// Nrd of the Dieudonne determinant: row reduction over the division ring to
// upper triangular form, then the product of the diagonal reduced norms. The
// scalar is independent of the pivot order; row swaps contribute Nrd(-1) = 1.
Value ndet(const QuatMatrix& m, const DivisionCert& cert, PivotOrder order = PivotOrder::FirstNonzero);

// Same reduction without the division certificate; pivots of reduced norm
// zero throw. Used by the split-case cross-oracle tests.
Value ndet_unchecked(const QuatMatrix& m, PivotOrder order = PivotOrder::FirstNonzero);

struct PivotError : std::runtime_error {
  explicit PivotError(const std::string& what) : std::runtime_error(what) {}
};

// For split algebras with pa = s^2: the regular embedding of an n x n
// quaternion matrix as a 2n x 2n matrix over the base field.
Matrix<Value> split_embedding(const QuatMatrix& m, const Value& s);

// rho(Delta) = sum_i alpha_i rho(w_i) for Delta = sum alpha_i w_i in A otimes K.
QuatMatrix rho_of_delta(const extfields::SimpleExt& k_ext, const std::vector<QuatQ>& alphas);

// N_{K/F}(Nrd_{A otimes K}(Delta)) == Nrd(ndet(rho(Delta))), exactly.
VerifyReport verify_quat_norm_det(const extfields::SimpleExt& k_ext, const std::vector<QuatQ>& alphas,
                                  const DivisionCert& cert);

// Candidate constants for the quadratic-scalar norm identity; evaluated per
// instance from the extension parameter c and the algebra degree.
struct GammaRule {
  std::string name;
  std::function<Rat(const Rat& c)> value;
};

std::vector<GammaRule> default_gamma_rules();

// Compares N_{K/F}(Nrd(x + y sqrt(c))) with Nrd(y (x y^{-1} x - gamma y)) for
// every candidate gamma; pass means at least one candidate matches.
VerifyReport quad_scalar_norm_probe(const QuatQ& x, const QuatQ& y, const Rat& c,
                                    const std::vector<GammaRule>& rules = default_gamma_rules());

// Batch sweep over random instances; the report lists the candidates that
// pass every instance and pass means that set is nonempty.
VerifyReport quad_scalar_norm_sweep(const Rat& a, const Rat& b, unsigned instances, std::uint64_t seed,
                                    const std::vector<GammaRule>& rules = default_gamma_rules());

// The reduced norm <1,-a,-b,ab> as a diagonal quadratic form, and the
// 4-dimensional multiplication table of (a,b/F) as an algebra structure.
forms::Form quaternion_norm_form(const Rat& a, const Rat& b);
forms::AlgebraStructure quaternion_structure(const Rat& a, const Rat& b);

// x^sharp = x^2 - T x + S for 3x3 matrices (equals the adjugate).
Matrix<Value> sharp3(const Matrix<Value>& x);

// Split degree-3 analogue of the probe: compares N_{K/F}(det(x + y sqrt(c)))
// with det(x y^sharp x - gamma det(y) y) / det(y) per candidate gamma.
VerifyReport split_deg3_norm_probe(const Matrix<Value>& x, const Matrix<Value>& y, const Rat& c,
                                   const std::vector<GammaRule>& rules = default_gamma_rules());

VerifyReport split_deg3_norm_sweep(unsigned instances, std::uint64_t seed,
                                   const std::vector<GammaRule>& rules = default_gamma_rules());

}  // namespace normforms::csa
