// Exhaustive norm-principle checking over small finite fields, and the
// bounded search for rational representation witnesses.
#pragma once

#include "normforms/extfields/simple_ext.hpp"
#include "normforms/forms/form.hpp"
#include "normforms/report.hpp"

namespace normforms::verify {

using exactalg::Rat;
using exactalg::Value;

struct SnpInstance {
  forms::Form phi;
  // Why D = G is justified for this form (a norm form, a power or product of
  // such, or an explicitly declared composition form). Enumeration refuses to
  // run without a pedigree, since the similarity group is not searchable.
  std::string composition_pedigree;
  unsigned extension_degree = 2;
  std::uint64_t budget = std::uint64_t{1} << 24;
};

// Enumerates D over F_{q^m}, pushes every represented value through the norm
// x -> x^((q^m-1)/(q-1)) and checks membership in the subgroup of F_q^*
// generated by D over F_q. Reports both value sets; a violation carries the
// offending value.
VerifyReport snp_bruteforce(const SnpInstance& instance);

// The multiplicative norm map of F_{q^m} over its prime-power base field.
Value finite_field_norm(const extfields::SimpleExt& k_ext, const Value& a);

struct WitnessSearch {
  bool found = false;
  std::vector<Rat> witness;
  std::uint64_t evaluations = 0;
  unsigned height = 0;
};

// Searches rational points of height <= height for phi(v) == target.
// Exhaustion is inconclusive, never a proof of non-representation.
WitnessSearch bounded_witness_search(const forms::Form& phi, const Rat& target, unsigned height,
                                     std::uint64_t budget = 20000000);

}  // namespace normforms::verify
