#include "normforms/verify/snp.hpp"

#include <numeric>

namespace normforms::verify {

using exactalg::FieldDesc;
using exactalg::FieldPtr;
using exactalg::SparsePoly;

namespace {

// Smallest monic irreducible polynomial of degree m over F_q, by rank order.
std::vector<Value> find_irreducible(const FieldPtr& fq, unsigned m) {
  const std::uint64_t q = fq->size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) total *= q;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    std::vector<Value> poly;
    std::uint64_t r = rank;
    for (unsigned i = 0; i < m; ++i) {
      poly.push_back(fq->element_at(r % q));
      r /= q;
    }
    poly.push_back(fq->one());
    if (exactalg::minpoly_irreducible(poly, fq)) return poly;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Value finite_field_norm(const extfields::SimpleExt& k_ext, const Value& a) {
  const std::uint64_t qm = k_ext.field()->size();
  const std::uint64_t q = k_ext.base()->size();
  Value n = a.pow(static_cast<long long>((qm - 1) / (q - 1)));
  return k_ext.field()->project(n);
}

VerifyReport snp_bruteforce(const SnpInstance& instance) {
  const forms::Form& phi = instance.phi;
  if (instance.composition_pedigree.empty())
    throw std::invalid_argument("brute-force norm-principle checking needs a composition pedigree");
  const FieldPtr& fq = phi.field();
  if (!fq->finite()) throw std::invalid_argument("brute-force checking needs a finite base field");
  const unsigned m = instance.extension_degree;
  if (m < 2) throw std::invalid_argument("extension degree must be >= 2");

  // D and the subgroup it generates over the base field.
  forms::ValueSet base_set = forms::value_set(phi, instance.budget);
  std::set<std::uint64_t> subgroup;
  for (const auto& v : base_set.subgroup) subgroup.insert(fq->rank_of(v));

  // The same polynomial over K = F_{q^m}.
  extfields::SimpleExt k_ext(FieldDesc::extension(fq, find_irreducible(fq, m), "t"));
  SparsePoly lifted = SparsePoly::zero(k_ext.field(), phi.poly().vars());
  for (const auto& [e, c] : phi.poly().terms()) lifted.add_term(e, k_ext.field()->embed(c));
  forms::Form phi_k(phi.degree(), phi.vars(), lifted);
  forms::ValueSet ext_set = forms::value_set(phi_k, instance.budget);

  VerifyReport r;
  r.identity = "snp";
  r.statement = "norms of values represented over F_{q^m} lie in the subgroup generated by the "
                "values represented over F_q";
  r.mode = "exhaustive";
  r.parameters["q"] = std::to_string(fq->size());
  r.parameters["m"] = std::to_string(m);
  r.parameters["pedigree"] = instance.composition_pedigree;
  r.pass = true;

  nlohmann::ordered_json d_base = nlohmann::ordered_json::array();
  for (const auto& v : base_set.represented) d_base.push_back(v.str());
  nlohmann::ordered_json grp = nlohmann::ordered_json::array();
  for (const auto& v : base_set.subgroup) grp.push_back(v.str());
  r.witness["d_base"] = d_base;
  r.witness["subgroup_base"] = grp;
  r.witness["d_ext_size"] = ext_set.represented.size();

  for (const auto& a : ext_set.represented) {
    Value n = finite_field_norm(k_ext, a);
    if (!subgroup.count(fq->rank_of(n))) {
      r.pass = false;
      r.witness["violation_value"] = a.str();
      r.witness["violation_norm"] = n.str();
      break;
    }
  }
  return r;
}

WitnessSearch bounded_witness_search(const forms::Form& phi, const Rat& target, unsigned height,
                                     std::uint64_t budget) {
  if (phi.field()->kind() != FieldDesc::Kind::Rationals)
    throw std::invalid_argument("witness search runs over the rationals");
  if (!phi.params().empty()) throw UnsupportedError("witness search needs a parameter-free form");

  // Rationals of height <= H in deterministic order: by height, then
  // numerator, then denominator.
  std::vector<Rat> pool = {Rat(0)};
  for (unsigned h = 1; h <= height; ++h) {
    for (long p = -static_cast<long>(h); p <= static_cast<long>(h); ++p) {
      if (p == 0) continue;
      if (std::gcd(std::abs(p), static_cast<long>(h)) == 1) pool.push_back(Rat(p) / Rat(h));
    }
    for (long q = 1; q < static_cast<long>(h); ++q) {
      if (std::gcd(static_cast<long>(h), q) != 1) continue;
      pool.push_back(Rat(h) / Rat(q));
      pool.push_back(Rat(-static_cast<long>(h)) / Rat(q));
    }
  }

  const unsigned n = phi.dim();
  WitnessSearch out;
  out.height = height;
  std::vector<std::size_t> idx(n, 0);
  auto qf = FieldDesc::rationals();
  for (;;) {
    bool all_zero = true;
    for (auto i : idx) all_zero = all_zero && i == 0;
    if (!all_zero) {
      if (++out.evaluations > budget) throw BudgetError("witness search exceeded its budget");
      std::vector<Value> point;
      point.reserve(n);
      for (auto i : idx) point.push_back(Value::make_rational(pool[i]));
      if (phi.evaluate(point).rat() == target) {
        out.found = true;
        for (auto i : idx) out.witness.push_back(pool[i]);
        return out;
      }
    }
    unsigned pos = 0;
    while (pos < n && ++idx[pos] == pool.size()) idx[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

}  // namespace normforms::verify
