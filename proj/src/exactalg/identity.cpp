#include "normforms/exactalg/identity.hpp"

#include <bit>

namespace normforms::exactalg {

std::uint64_t uniform_mod(std::mt19937_64& gen, std::uint64_t p) {
  const int bits = std::bit_width(p - 1);
  const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  for (;;) {
    std::uint64_t x = gen() & mask;
    if (x < p) return x;
  }
}

std::string schwartz_zippel_bound(unsigned degree_bound, std::uint64_t prime, unsigned trials) {
  Rat bound = rat_pow(Rat(degree_bound) / Rat(BigInt(prime)), static_cast<long>(trials));
  return rat_to_string(bound);
}

VerifyReport identity_test_exact(const SparsePoly& p, const SparsePoly& q, const std::string& name) {
  VerifyReport r;
  r.identity = name;
  r.statement = "p == q as polynomials in canonical form";
  r.mode = "exact";
  SparsePoly diff = p - q;
  r.pass = diff.is_zero();
  if (!r.pass) {
    const auto& [e, c] = *diff.terms().begin();
    SparsePoly lead = diff.zero_like();
    lead.add_term(e, c);
    r.witness["difference_leading_term"] = lead.str();
    r.witness["difference_term_count"] = diff.term_count();
  }
  return r;
}

VerifyReport identity_test_probabilistic(const SparsePoly& p, const SparsePoly& q,
                                         const ProbabilisticConfig& cfg, const std::string& name) {
  const unsigned degree_bound = std::max(p.total_degree(), q.total_degree());
  if (!is_prime_u64(cfg.prime)) throw std::invalid_argument("probabilistic modulus must be prime");
  if (cfg.prime <= degree_bound)
    throw std::invalid_argument("probabilistic prime must exceed the total degree");
  auto vars = SparsePoly::merged_vars(p.vars(), q.vars());
  const std::uint64_t prime = cfg.prime;
  auto eval = [prime](const SparsePoly& poly) {
    return [&poly, prime](const std::map<std::string, ModP>& point) {
      std::map<std::string, std::uint64_t> raw;
      for (const auto& [k, v] : point) raw[k] = v.v;
      return ModP(poly.eval_mod(raw, prime), prime);
    };
  };
  VerifyReport r = compare_probabilistic(vars, degree_bound, eval(p), eval(q), cfg, name);
  r.statement = "p == q tested at random points modulo a prime";
  return r;
}

VerifyReport compare_probabilistic(const std::vector<std::string>& variables, unsigned degree_bound,
                                   const ModEvaluator& lhs, const ModEvaluator& rhs,
                                   const ProbabilisticConfig& cfg, const std::string& name) {
  if (!is_prime_u64(cfg.prime)) throw std::invalid_argument("probabilistic modulus must be prime");
  if (cfg.prime <= degree_bound)
    throw std::invalid_argument("probabilistic prime must exceed the degree bound");
  VerifyReport r;
  r.identity = name;
  r.statement = "randomized evaluation of both sides modulo a prime";
  r.mode = "probabilistic";
  r.seed = cfg.seed;
  r.parameters["prime"] = std::to_string(cfg.prime);
  r.parameters["trials"] = std::to_string(cfg.trials);
  r.parameters["degree_bound"] = std::to_string(degree_bound);
  r.failure_bound = schwartz_zippel_bound(degree_bound, cfg.prime, cfg.trials);
  std::mt19937_64 gen(cfg.seed);
  r.pass = true;
  for (unsigned t = 0; t < cfg.trials; ++t) {
    std::map<std::string, ModP> point;
    for (const auto& v : variables) point.emplace(v, ModP(uniform_mod(gen, cfg.prime), cfg.prime));
    ModP a = lhs(point), b = rhs(point);
    if (!(a == b)) {
      r.pass = false;
      nlohmann::ordered_json pt = nlohmann::ordered_json::object();
      for (const auto& [k, v] : point) pt[k] = v.v;
      r.witness["trial"] = t;
      r.witness["point"] = pt;
      r.witness["lhs"] = a.v;
      r.witness["rhs"] = b.v;
      break;
    }
  }
  return r;
}

}  // namespace normforms::exactalg
