// Polynomial identity testing: exact (canonical-form) comparison and
// randomized evaluation with a Schwartz-Zippel failure bound.
#pragma once

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "normforms/exactalg/modp.hpp"
#include "normforms/exactalg/sparsepoly.hpp"
#include "normforms/report.hpp"

namespace normforms::exactalg {

struct ProbabilisticConfig {
  std::uint64_t prime = kMersenne61;
  unsigned trials = 3;
  std::uint64_t seed = 0;
};

VerifyReport identity_test_exact(const SparsePoly& p, const SparsePoly& q,
                                 const std::string& name = "identity");

// Evaluates p - q at uniformly random points modulo cfg.prime. The prime must
// be prime and exceed the total degree of both sides; the reported failure
// bound is (degree_bound / prime)^trials as an exact rational.
VerifyReport identity_test_probabilistic(const SparsePoly& p, const SparsePoly& q,
                                         const ProbabilisticConfig& cfg,
                                         const std::string& name = "identity");

// Same randomized comparison for two structured computations evaluated mod p:
// each callback receives one field value per (sorted) variable name. Used by
// the symbolic engines when materializing both sides would be wasteful.
using ModEvaluator = std::function<ModP(const std::map<std::string, ModP>&)>;
VerifyReport compare_probabilistic(const std::vector<std::string>& variables, unsigned degree_bound,
                                   const ModEvaluator& lhs, const ModEvaluator& rhs,
                                   const ProbabilisticConfig& cfg, const std::string& name);

// Exact rational (degree_bound / prime)^trials rendered as a string.
std::string schwartz_zippel_bound(unsigned degree_bound, std::uint64_t prime, unsigned trials);

// Deterministic uniform draw from [0, p) using masked rejection, so results
// are identical across standard library implementations.
std::uint64_t uniform_mod(std::mt19937_64& gen, std::uint64_t p);

}  // namespace normforms::exactalg
