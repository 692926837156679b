#include "normforms/extfields/norm_transfer.hpp"

namespace normforms::extfields {

using exactalg::FieldDesc;
using exactalg::Rat;

VerifyReport verify_norm_transfer_instance(const SimpleExt& alpha_ext, const SimpleExt& k_ext,
                                           const std::vector<Value>& z_coords_over_k) {
  if (alpha_ext.base()->kind() != FieldDesc::Kind::Rationals ||
      k_ext.base()->kind() != FieldDesc::Kind::Rationals)
    throw UnsupportedError("instance verification is implemented over the rationals");
  const unsigned d = alpha_ext.degree();
  if (z_coords_over_k.size() != d) throw std::invalid_argument("z needs one K-coordinate per power of alpha");
  for (const auto& c : z_coords_over_k)
    if (!exactalg::same_field(c.field(), k_ext.field()))
      throw FieldMismatchError("z coordinates must lie in K");
  bool all_zero = true;
  for (const auto& c : z_coords_over_k) all_zero = all_zero && c.is_zero();
  if (all_zero) throw std::invalid_argument("z must be nonzero");

  // Linear disjointness: the minimal polynomial of alpha stays irreducible
  // over K. Without it phi_K is not the norm of K(alpha)/K and the identity
  // genuinely fails.
  std::vector<Value> lifted_alpha;
  for (const auto& c : alpha_ext.field()->minpoly()) lifted_alpha.push_back(k_ext.field()->from_rat(c.rat()));
  if (!exactalg::minpoly_irreducible(lifted_alpha, k_ext.field()))
    throw DisjointnessError("K and F(alpha) are not linearly disjoint over F");

  // Route 1: phi_K(z) = N_{K(alpha)/K}(z), then N_{K/F}.
  SimpleExt upstairs_over_k(FieldDesc::extension_trusted(k_ext.field(), lifted_alpha, "al"));
  Value phi_k_of_z = upstairs_over_k.norm(upstairs_over_k.element(z_coords_over_k));
  Value lhs = k_ext.norm(phi_k_of_z);

  // Route 2: N_{K(alpha)/F(alpha)}(z) = sum_i a_i alpha^(i-1), then the norm
  // form of F(alpha) at (a_i). Irreducibility of K's minimal polynomial over
  // F(alpha) follows from the verified disjointness by the degree count.
  std::vector<Value> lifted_k;
  for (const auto& c : k_ext.field()->minpoly()) lifted_k.push_back(alpha_ext.field()->from_rat(c.rat()));
  SimpleExt upstairs_over_alpha(FieldDesc::extension_trusted(alpha_ext.field(), lifted_k, "bt"));
  std::vector<Value> w_coords;  // coordinates of z over F(alpha)
  for (unsigned j = 0; j < k_ext.degree(); ++j) {
    std::vector<Value> coords;
    for (unsigned i = 0; i < d; ++i) coords.push_back(z_coords_over_k[i].coords()[j]);
    w_coords.push_back(alpha_ext.element(coords));
  }
  Value witness_elem = upstairs_over_alpha.norm(upstairs_over_alpha.element(w_coords));
  Value rhs = alpha_ext.norm(witness_elem);

  VerifyReport r;
  r.identity = "thm1";
  r.statement = "N_{K/F}(phi_K(z)) == phi(a_1,...,a_d) with phi the norm form of F(alpha)";
  r.mode = "exact";
  r.parameters["alpha_field"] = alpha_ext.field()->str();
  r.parameters["k_field"] = k_ext.field()->str();
  r.pass = lhs == rhs;
  nlohmann::ordered_json vec = nlohmann::ordered_json::array();
  for (const auto& c : witness_elem.coords()) vec.push_back(c.str());
  r.witness["a_vector"] = vec;
  r.witness["lhs"] = lhs.str();
  r.witness["rhs"] = rhs.str();
  return r;
}

}  // namespace normforms::extfields
