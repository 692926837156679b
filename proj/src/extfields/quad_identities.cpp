#include "normforms/extfields/quad_identities.hpp"

namespace normforms::extfields {

using exactalg::FieldDesc;
using exactalg::Rat;
using exactalg::Value;

namespace {

std::vector<std::string> identity_symbols(const QuadIdentitySpec& spec) {
  std::vector<std::string> symbols;
  if (spec.shifted && !spec.specialize_b_zero) symbols.push_back("b");
  symbols.push_back("c");
  symbols.push_back("e");
  for (unsigned i = 1; i <= spec.d; ++i) symbols.push_back("u" + std::to_string(i));
  for (unsigned i = 1; i <= spec.d; ++i) symbols.push_back("v" + std::to_string(i));
  return symbols;
}

std::string identity_name(const QuadIdentitySpec& spec) { return spec.shifted ? "thm3" : "thm2"; }

std::string identity_statement(const QuadIdentitySpec& spec) {
  std::string mp = spec.shifted ? "x^d - b*x - c" : "x^d - c";
  return "N_{K/F}(phi_K(z)) == phi(A-vector) for phi the norm form of F[x]/(" + mp +
         "), K = F(sqrt(e)), z_i = u_i + v_i*sqrt(e)";
}

void fill_common(VerifyReport& r, const QuadIdentitySpec& spec) {
  r.identity = identity_name(spec);
  r.statement = identity_statement(spec);
  r.parameters["d"] = std::to_string(spec.d);
  r.parameters["minpoly"] = spec.shifted ? "x^d-b*x-c" : "x^d-c";
  if (spec.specialize_b_zero) r.parameters["b"] = "0";
}

}  // namespace

unsigned quad_identity_degree_bound(unsigned d) { return 2 * d * (d + 2); }

std::vector<SparsePoly> quad_identity_vector_polys(const QuadIdentitySpec& spec) {
  auto q = FieldDesc::rationals();
  exactalg::PolyRing ring(q, identity_symbols(spec));
  SparsePoly e = ring.var("e"), c = ring.var("c");
  SparsePoly b = (spec.shifted && !spec.specialize_b_zero) ? ring.var("b") : ring.zero();
  std::vector<QuadExt<SparsePoly>> z;
  for (unsigned i = 1; i <= spec.d; ++i)
    z.emplace_back(ring.var("u" + std::to_string(i)), ring.var("v" + std::to_string(i)), e);
  auto a = sigma_symmetric_entries(z);
  return represented_vector(a, c, spec.shifted ? &b : nullptr);
}

VerifyReport verify_quad_identity_exact(const QuadIdentitySpec& spec) {
  if (spec.d < 2) throw std::invalid_argument("identity needs degree >= 2");
  auto q = FieldDesc::rationals();
  exactalg::PolyRing ring(q, identity_symbols(spec));
  SparsePoly e = ring.var("e"), c = ring.var("c");
  SparsePoly b = (spec.shifted && !spec.specialize_b_zero) ? ring.var("b") : ring.zero();
  std::vector<QuadExt<SparsePoly>> z;
  for (unsigned i = 1; i <= spec.d; ++i)
    z.emplace_back(ring.var("u" + std::to_string(i)), ring.var("v" + std::to_string(i)), e);

  auto sides = quad_identity_sides(z, c, spec.shifted ? &b : nullptr);

  VerifyReport r;
  fill_common(r, spec);
  r.mode = "exact";
  r.pass = sides.lhs == sides.rhs;
  nlohmann::ordered_json vec = nlohmann::ordered_json::array();
  for (const auto& entry : sides.vec) vec.push_back(entry.str());
  r.witness["vector"] = vec;
  r.witness["lhs_terms"] = sides.lhs.term_count();
  r.witness["rhs_terms"] = sides.rhs.term_count();
  if (!r.pass) r.witness["difference"] = (sides.lhs - sides.rhs).str();
  return r;
}

VerifyReport verify_quad_identity_probabilistic(const QuadIdentitySpec& spec,
                                                const ProbabilisticConfig& cfg) {
  if (spec.d < 2) throw std::invalid_argument("identity needs degree >= 2");
  const unsigned d = spec.d;
  auto symbols = identity_symbols(spec);
  auto evaluate = [&spec, d](bool lhs_side) {
    return [&spec, d, lhs_side](const std::map<std::string, ModP>& point) {
      const ModP zero = point.begin()->second.zero_like();
      ModP c = point.at("c"), e = point.at("e");
      ModP b = (spec.shifted && !spec.specialize_b_zero) ? point.at("b") : zero;
      std::vector<QuadExt<ModP>> z;
      for (unsigned i = 1; i <= d; ++i)
        z.emplace_back(point.at("u" + std::to_string(i)), point.at("v" + std::to_string(i)), e);
      auto sides = quad_identity_sides(z, c, spec.shifted ? &b : nullptr);
      return lhs_side ? sides.lhs : sides.rhs;
    };
  };
  VerifyReport r = exactalg::compare_probabilistic(symbols, quad_identity_degree_bound(d),
                                                   evaluate(true), evaluate(false), cfg,
                                                   identity_name(spec));
  fill_common(r, spec);
  r.mode = "probabilistic";
  return r;
}

}  // namespace normforms::extfields
