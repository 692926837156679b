#include "normforms/verify/example1.hpp"

#include "normforms/exactalg/identity.hpp"
#include "normforms/exactalg/quotient.hpp"

namespace normforms::verify {

using exactalg::FieldDesc;
using exactalg::FieldPtr;
using exactalg::PolyRing;
using exactalg::QuadExt;
using exactalg::QuotientExt;
using exactalg::Value;
using forms::Form;

std::vector<SparsePoly> pfister_coeffs(const std::vector<SparsePoly>& entries, PfisterSign sign) {
  if (entries.empty()) throw std::invalid_argument("Pfister symbol needs at least one entry");
  std::vector<SparsePoly> coeffs = {entries[0].one_like()};
  for (const auto& a : entries) {
    std::vector<SparsePoly> next = coeffs;
    for (const auto& cpoly : coeffs) next.push_back(sign == PfisterSign::MinusEntries ? -(a * cpoly) : a * cpoly);
    coeffs = std::move(next);
  }
  return coeffs;
}

namespace {

std::string sign_name(PfisterSign s) { return s == PfisterSign::MinusEntries ? "<1,-a>" : "<1,a>"; }

struct QuarticPieces {
  std::vector<std::string> uvars, wvars, ordered;
  std::vector<SparsePoly> phi0;  // diagonal coefficients of the r-fold form
  SparsePoly c;
};

QuarticPieces quartic_pieces(unsigned r, PfisterSign sign, const PolyRing& ring) {
  QuarticPieces p{.uvars = {}, .wvars = {}, .ordered = {}, .phi0 = {}, .c = ring.var("c")};
  const unsigned n = 1u << r;
  for (unsigned j = 1; j <= n; ++j) {
    p.uvars.push_back("u" + std::to_string(j));
    p.wvars.push_back("w" + std::to_string(j));
    p.ordered.push_back(p.uvars.back());
    p.ordered.push_back(p.wvars.back());
  }
  std::vector<SparsePoly> entries;
  for (unsigned i = 1; i <= r; ++i) entries.push_back(ring.var("a" + std::to_string(i)));
  p.phi0 = pfister_coeffs(entries, sign);
  return p;
}

std::vector<std::string> quartic_symbols(unsigned r) {
  std::vector<std::string> s;
  for (unsigned i = 1; i <= r; ++i) s.push_back("a" + std::to_string(i));
  s.push_back("c");
  const unsigned n = 1u << r;
  for (unsigned j = 1; j <= n; ++j) {
    s.push_back("u" + std::to_string(j));
    s.push_back("w" + std::to_string(j));
  }
  return s;
}

}  // namespace

QuarticTransfer example1_quartic(unsigned r, PfisterSign oracle_sign) {
  if (r < 1 || r > 2) throw std::invalid_argument("quartic transfer implemented for r in {1, 2}");
  auto q = FieldDesc::rationals();
  PolyRing ring(q, quartic_symbols(r));
  QuarticPieces pieces = quartic_pieces(r, oracle_sign, ring);
  const unsigned n = 1u << r;
  std::vector<std::string> params;
  for (unsigned i = 1; i <= r; ++i) params.push_back("a" + std::to_string(i));
  params.push_back("c");

  // Oracle: phi0(u + w sqrt(c)) times its conjugate, via pair arithmetic.
  QuadExt<SparsePoly> phi0_of_z(ring.zero(), ring.zero(), pieces.c);
  for (unsigned j = 0; j < n; ++j) {
    QuadExt<SparsePoly> z(ring.var(pieces.uvars[j]), ring.var(pieces.wvars[j]), pieces.c);
    phi0_of_z = phi0_of_z + QuadExt<SparsePoly>::scalar(pieces.phi0[j], pieces.c) * (z * z);
  }
  SparsePoly oracle_poly = phi0_of_z.norm();
  Form oracle(4, pieces.ordered, oracle_poly, params);

  // Independent route: norm as the determinant of the multiplication matrix
  // in Q[a,c,u,w][s]/(s^2 - c).
  QuotientExt<SparsePoly> ext({-pieces.c, ring.zero(), ring.one()});
  auto acc = ext.zero();
  for (unsigned j = 0; j < n; ++j) {
    auto z = ext.element({ring.var(pieces.uvars[j]), ring.var(pieces.wvars[j])});
    acc = ext.add(acc, ext.scale(ext.mul(z, z), pieces.phi0[j]));
  }
  SparsePoly transfer_poly = ext.norm(acc);
  Form transfer(4, pieces.ordered, transfer_poly, params);

  QuarticTransfer out{oracle, transfer, {}, {}};
  out.agreement = exactalg::identity_test_exact(oracle_poly, transfer_poly, "example1-quartic");
  out.agreement.statement = "conjugate-product oracle equals the multiplication-matrix transfer";
  out.agreement.parameters["r"] = std::to_string(r);
  out.agreement.convention = sign_name(oracle_sign);

  // Convention grid for the displayed closed form.
  VerifyReport grid;
  grid.identity = "example1-quartic";
  grid.statement = "displayed quartic expression vs the definitional transfer, per convention";
  grid.mode = "exact";
  grid.parameters["r"] = std::to_string(r);
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (PfisterSign sign : {PfisterSign::MinusEntries, PfisterSign::PlusEntries}) {
    QuarticPieces pc = quartic_pieces(r, sign, ring);
    // Oracle under this sign convention.
    QuadExt<SparsePoly> val(ring.zero(), ring.zero(), pc.c);
    for (unsigned j = 0; j < n; ++j) {
      QuadExt<SparsePoly> z(ring.var(pc.uvars[j]), ring.var(pc.wvars[j]), pc.c);
      val = val + QuadExt<SparsePoly>::scalar(pc.phi0[j], pc.c) * (z * z);
    }
    SparsePoly oracle_here = val.norm();

    // (r+1)-fold symbol including c, evaluated at (u-block, w-block).
    std::vector<SparsePoly> big = pc.phi0;
    for (unsigned j = 0; j < n; ++j)
      big.push_back(sign == PfisterSign::MinusEntries ? -(pc.c * pc.phi0[j]) : pc.c * pc.phi0[j]);
    SparsePoly big_at_uw = ring.zero();
    for (unsigned j = 0; j < n; ++j) big_at_uw = big_at_uw + big[j] * ring.var(pc.uvars[j]).pow(2);
    for (unsigned j = 0; j < n; ++j) big_at_uw = big_at_uw + big[n + j] * ring.var(pc.wvars[j]).pow(2);

    std::vector<std::pair<std::string, std::vector<SparsePoly>>> pairings;
    std::vector<SparsePoly> aligned;
    for (unsigned j = 0; j < n; ++j) aligned.push_back(ring.var(pc.uvars[j]) * ring.var(pc.wvars[j]));
    pairings.emplace_back("aligned-products", aligned);
    if (r == 1)
      pairings.emplace_back("crossed-products", std::vector<SparsePoly>{ring.var("u1") * ring.var("w2"),
                                                                        ring.var("u2") * ring.var("w1")});
    for (const auto& [pname, args] : pairings) {
      SparsePoly phi0_at_args = ring.zero();
      for (unsigned j = 0; j < n; ++j) phi0_at_args = phi0_at_args + pc.phi0[j] * args[j].pow(2);
      SparsePoly formula = big_at_uw.pow(2) - ring.c(4) * pc.c * phi0_at_args;
      bool match = formula == oracle_here;
      results[sign_name(sign) + " / " + pname] = match ? "match" : "mismatch";
    }

    // Positive control: the conjugate-expansion identity, always true.
    SparsePoly phi0_u = ring.zero(), phi0_w = ring.zero(), polar_uw = ring.zero();
    for (unsigned j = 0; j < n; ++j) {
      phi0_u = phi0_u + pc.phi0[j] * ring.var(pc.uvars[j]).pow(2);
      phi0_w = phi0_w + pc.phi0[j] * ring.var(pc.wvars[j]).pow(2);
      polar_uw = polar_uw + pc.phi0[j] * ring.var(pc.uvars[j]) * ring.var(pc.wvars[j]);
    }
    SparsePoly control = (phi0_u + pc.c * phi0_w).pow(2) - ring.c(4) * pc.c * polar_uw.pow(2);
    results[sign_name(sign) + " / conjugate-expansion"] = (control == oracle_here) ? "match" : "mismatch";
  }
  grid.witness["conventions"] = results;
  // Outcomes live in the witness; the report as a whole passes when the
  // always-true conjugate-expansion control holds under both conventions.
  grid.pass = true;
  for (const auto& [key, val] : results.items())
    if (key.find("conjugate-expansion") != std::string::npos && val.get<std::string>() != "match")
      grid.pass = false;
  out.conventions = grid;
  return out;
}

SexticTransfer example1_sextic(unsigned r, PfisterSign oracle_sign) {
  if (r != 1) throw std::invalid_argument("sextic transfer implemented for r = 1");
  auto q = FieldDesc::rationals();
  const unsigned n = 1u << r;

  std::vector<std::string> symbols = {"a1", "c"};
  std::vector<std::string> ordered;
  std::vector<std::string> uv = {"u1", "u2"}, vv = {"v1", "v2"}, wv = {"w1", "w2"};
  for (unsigned j = 0; j < n; ++j) {
    ordered.push_back(uv[j]);
    ordered.push_back(vv[j]);
    ordered.push_back(wv[j]);
    symbols.push_back(uv[j]);
    symbols.push_back(vv[j]);
    symbols.push_back(wv[j]);
  }
  PolyRing ring(q, symbols);
  SparsePoly c = ring.var("c");
  std::vector<SparsePoly> phi0 = pfister_coeffs({ring.var("a1")}, oracle_sign);
  std::vector<std::string> params = {"a1", "c"};

  // Route 1: norm of phi0(z) in Q[sym][t]/(t^3 - c).
  QuotientExt<SparsePoly> kummer({-c, ring.zero(), ring.zero(), ring.one()});
  auto x_elem = kummer.zero();
  for (unsigned j = 0; j < n; ++j) {
    auto z = kummer.element({ring.var(uv[j]), ring.var(vv[j]), ring.var(wv[j])});
    x_elem = kummer.add(x_elem, kummer.scale(kummer.mul(z, z), phi0[j]));
  }
  SparsePoly oracle_poly = kummer.norm(x_elem);
  Form oracle(6, ordered, oracle_poly, params);

  // Route 2: product of the three conjugates over Q(omega), omega^2+omega+1=0.
  VerifyReport conj;
  conj.identity = "example1-sextic";
  conj.statement = "triple-conjugate product over Q(omega) equals the determinant norm";
  conj.mode = "exact";
  conj.parameters["r"] = std::to_string(r);
  conj.convention = sign_name(oracle_sign);
  {
    auto qw = FieldDesc::extension(q, {q->one(), q->one(), q->one()}, "omega");
    Value omega = Value::make_extension({q->zero(), q->one()}, qw);
    auto lift = [&](const SparsePoly& p) {
      SparsePoly out = SparsePoly::zero(qw, p.vars());
      for (const auto& [e, cc] : p.terms()) out.add_term(e, qw->embed(cc));
      return out;
    };
    std::vector<SparsePoly> mw = {lift(-c), SparsePoly::zero(qw), SparsePoly::zero(qw),
                                  SparsePoly::constant(qw->one())};
    QuotientExt<SparsePoly> ring_w(mw);
    std::vector<SparsePoly> xw;
    for (const auto& coord : x_elem) xw.push_back(lift(coord));
    auto sigma = [&](const std::vector<SparsePoly>& el, unsigned power) {
      std::vector<SparsePoly> out = el;
      Value w1 = omega.pow(power), w2 = omega.pow(2 * power);
      out[1] = SparsePoly::constant(w1) * out[1];
      out[2] = SparsePoly::constant(w2) * out[2];
      return out;
    };
    auto prod = ring_w.mul(ring_w.mul(xw, sigma(xw, 1)), sigma(xw, 2));
    bool tfree = prod[1].is_zero() && prod[2].is_zero();
    bool matches = false;
    if (tfree) {
      // every coefficient must be omega-free and agree with the oracle
      SparsePoly down = SparsePoly::zero(q, prod[0].vars());
      bool rational = true;
      for (const auto& [e, cc] : prod[0].terms()) {
        const auto& coords = cc.coords();
        if (!coords[1].is_zero()) {
          rational = false;
          break;
        }
        down.add_term(e, coords[0]);
      }
      matches = rational && down == oracle_poly;
    }
    conj.pass = tfree && matches;
    if (!conj.pass) conj.witness["note"] = "conjugate product failed to collapse";
  }

  // Interpretation grid for the displayed sextic expression.
  VerifyReport interp;
  interp.identity = "example1-sextic";
  interp.statement = "displayed sextic expression vs the definitional transfer, per interpretation";
  interp.mode = "exact";
  interp.parameters["r"] = std::to_string(r);
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  for (PfisterSign sign : {PfisterSign::MinusEntries, PfisterSign::PlusEntries}) {
    std::vector<SparsePoly> p0 = pfister_coeffs({ring.var("a1")}, sign);
    // Oracle under this sign.
    auto xe = kummer.zero();
    for (unsigned j = 0; j < n; ++j) {
      auto z = kummer.element({ring.var(uv[j]), ring.var(vv[j]), ring.var(wv[j])});
      xe = kummer.add(xe, kummer.scale(kummer.mul(z, z), p0[j]));
    }
    SparsePoly oracle_here = kummer.norm(xe);

    auto diag_at = [&](const std::vector<SparsePoly>& coeffs, const std::vector<SparsePoly>& args) {
      SparsePoly acc = ring.zero();
      for (std::size_t j = 0; j < coeffs.size(); ++j) acc = acc + coeffs[j] * args[j].pow(2);
      return acc;
    };
    SparsePoly two_c = ring.c(2) * c;
    std::vector<SparsePoly> big = p0;
    for (unsigned j = 0; j < n; ++j)
      big.push_back(sign == PfisterSign::MinusEntries ? -(two_c * p0[j]) : two_c * p0[j]);
    std::vector<SparsePoly> gamma1 = {c * p0[0], c * p0[1], ring.c(2) * p0[0], ring.c(2) * p0[1]};
    std::vector<SparsePoly> gamma2 = {p0[0], p0[1], ring.c(2) * p0[0], ring.c(2) * p0[1]};

    auto u = [&](unsigned j) { return ring.var(uv[j]); };
    auto v = [&](unsigned j) { return ring.var(vv[j]); };
    auto w = [&](unsigned j) { return ring.var(wv[j]); };
    SparsePoly beta = diag_at(big, {u(0), u(1), v(0) * w(0), v(1) * w(1)});
    SparsePoly g1 = diag_at(gamma1, {w(0), w(1), u(0) * v(0), u(1) * v(1)});
    SparsePoly g2 = diag_at(gamma2, {v(0), v(1), u(0) * w(0), u(1) * w(1)});
    SparsePoly cross = ring.c(3) * c * beta * g1 * g2;

    SparsePoly cube_reading = beta.pow(3) + c * g1.pow(3) + c * c * g2.pow(3) - cross;
    SparsePoly plain_reading = beta + c * g1 + c * c * g2 - cross;
    results[sign_name(sign) + " / value-cubed"] = (cube_reading == oracle_here) ? "match" : "mismatch";
    results[sign_name(sign) + " / uncubed"] = (plain_reading == oracle_here) ? "match" : "mismatch";

    // Positive control: the coordinate expansion of the Kummer norm.
    SparsePoly control = xe[0].pow(3) + c * xe[1].pow(3) + c * c * xe[2].pow(3) -
                         ring.c(3) * c * xe[0] * xe[1] * xe[2];
    results[sign_name(sign) + " / coordinate-expansion"] = (control == oracle_here) ? "match" : "mismatch";
  }
  interp.witness["interpretations"] = results;
  interp.pass = true;
  for (const auto& [key, val] : results.items()) {
    if (key.find("coordinate-expansion") != std::string::npos && val.get<std::string>() != "match")
      interp.pass = false;
  }
  // Degree and dimension of the transfer.
  interp.witness["oracle_degree"] = oracle.degree();
  interp.witness["oracle_dimension"] = oracle.dim();

  return SexticTransfer{oracle, conj, interp};
}

exactalg::Matrix<SparsePoly> roundness_witness(const forms::Form& phi,
                                               const forms::AlgebraStructure& algebra,
                                               const std::vector<Value>& x0) {
  if (phi.dim() != algebra.dim()) throw std::invalid_argument("form and algebra dimensions differ");
  exactalg::Matrix<SparsePoly> m = algebra.left_mult_matrix(x0);
  if (exactalg::det_cofactor(m).is_zero())
    throw std::invalid_argument("x0 is not invertible in the algebra");
  return m;
}

VerifyReport roundness_check(const forms::Form& phi, const forms::AlgebraStructure& algebra,
                             const std::vector<Value>& x0) {
  exactalg::Matrix<SparsePoly> m = roundness_witness(phi, algebra, x0);
  // phi(x0) as a polynomial in the parameters (a constant when there are none)
  std::map<std::string, exactalg::SparsePoly> subs;
  for (unsigned i = 0; i < phi.dim(); ++i) subs.emplace(phi.vars()[i], SparsePoly::constant(x0[i]));
  SparsePoly factor = phi.poly().substitute(subs);
  if (factor.is_zero()) throw std::invalid_argument("phi(x0) must be nonzero");
  VerifyReport r = forms::isometry_witness_check(forms::scale(phi, factor), phi, m);
  r.identity = "roundness-witness";
  r.statement = "phi(M v) == phi(x0) phi(v) for M the multiplication by x0";
  return r;
}

}  // namespace normforms::verify
