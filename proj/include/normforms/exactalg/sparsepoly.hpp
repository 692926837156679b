// Exact sparse multivariate polynomials over a coefficient field.
//
// Terms are kept in a map ordered by descending graded-lexicographic order,
// so iteration starts at the leading term, printing is canonical and equality
// is syntactic. Variable lists are sorted (natural order) and deduplicated;
// binary operations align operands over the union of their variables.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "normforms/exactalg/field.hpp"

namespace normforms::exactalg {

using Exponents = std::vector<std::uint32_t>;

struct GrlexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Value, GrlexDesc>;

  SparsePoly();  // zero over the rationals, no variables

  static SparsePoly zero(FieldPtr f, std::vector<std::string> vars = {});
  static SparsePoly constant(Value c, std::vector<std::string> vars = {});
  static SparsePoly variable(const std::string& name, FieldPtr f);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Value constant_value() const;  // works for the zero polynomial too
  unsigned total_degree() const;
  unsigned degree_in(const std::set<std::string>& subset) const;
  std::size_t term_count() const { return terms_.size(); }

  // Accumulates a term; zero results are dropped.
  void add_term(Exponents e, Value c);

  SparsePoly zero_like() const;
  SparsePoly one_like() const;

  SparsePoly operator-() const;
  SparsePoly pow(unsigned e) const;

  Value eval(const std::map<std::string, Value>& point) const;
  std::uint64_t eval_mod(const std::map<std::string, std::uint64_t>& point, std::uint64_t p) const;

  SparsePoly substitute(const std::map<std::string, SparsePoly>& subs) const;
  SparsePoly derivative(const std::string& var) const;
  SparsePoly rename_vars(const std::map<std::string, std::string>& renames) const;
  // Same polynomial viewed over a larger variable set.
  SparsePoly with_vars(const std::vector<std::string>& extra) const;

  // Terms whose exponents match `exact` on those variables, with the matched
  // variables removed.
  SparsePoly extract(const std::map<std::string, std::uint32_t>& exact) const;

  bool is_homogeneous(unsigned d, const std::vector<std::string>& in_vars) const;

  // Exact quotient; throws if the divisor does not divide this polynomial.
  SparsePoly exact_divide(const SparsePoly& divisor) const;

  std::string str() const;

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  static std::vector<std::string> merged_vars(const std::vector<std::string>& a,
                                              const std::vector<std::string>& b);

 private:
  FieldPtr field_;
  std::vector<std::string> vars_;
  TermMap terms_;

  SparsePoly remapped(const std::vector<std::string>& new_vars) const;
  static void align(SparsePoly& a, SparsePoly& b);
};

// Convenience factory bound to one field and variable list; the variables of
// the returned polynomials still merge automatically under arithmetic.
class PolyRing {
 public:
  PolyRing(FieldPtr f, std::vector<std::string> vars);
  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  SparsePoly var(const std::string& name) const;
  SparsePoly c(const Rat& r) const;
  SparsePoly c(long long n) const;
  SparsePoly c(const Value& v) const;
  SparsePoly zero() const;
  SparsePoly one() const;

 private:
  FieldPtr field_;
  std::vector<std::string> vars_;
};

SparsePoly operator*(const Value& c, const SparsePoly& p);
SparsePoly operator*(const Rat& c, const SparsePoly& p);

}  // namespace normforms::exactalg
