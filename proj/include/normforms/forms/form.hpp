// Forms of degree d: homogeneous polynomials with form variables and optional
// symbolic parameters, their polarization, radical, value sets over finite
// fields, isometry witnesses and composition checks.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normforms/exactalg/matrix.hpp"
#include "normforms/exactalg/sparsepoly.hpp"
#include "normforms/report.hpp"

namespace normforms::forms {

using exactalg::FieldPtr;
using exactalg::Matrix;
using exactalg::SparsePoly;
using exactalg::Value;

class Form {
 public:
  // `vars` is the ordered coordinate list (the dimension); `params` are
  // symbolic scalars the coefficients may mention. The polynomial must be
  // homogeneous of the stated degree in the form variables, and the field
  // characteristic must be 0 or exceed the degree.
  Form(unsigned degree, std::vector<std::string> vars, SparsePoly poly,
       std::vector<std::string> params = {});

  unsigned degree() const { return degree_; }
  unsigned dim() const { return static_cast<unsigned>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& params() const { return params_; }
  const SparsePoly& poly() const { return poly_; }
  const FieldPtr& field() const { return poly_.field(); }

  Value evaluate(const std::vector<Value>& point,
                 const std::map<std::string, Value>& param_values = {}) const;

  // Same form on freshly named coordinates prefix1..prefixn.
  Form renamed(const std::string& prefix) const;

  std::string str() const;

 private:
  unsigned degree_;
  std::vector<std::string> vars_;
  std::vector<std::string> params_;
  SparsePoly poly_;
};

struct MultilinearMap {
  unsigned arity = 0;
  unsigned dim = 0;
  std::vector<std::string> params;
  // block_vars[k][i] names coordinate i of argument k.
  std::vector<std::vector<std::string>> block_vars;
  SparsePoly poly;
};

// The symmetric multilinear map with theta(v,...,v) = phi(v), computed by the
// alternating sum over nonempty subsets of the arguments divided by d!.
MultilinearMap polarize(const Form& phi);

// Basis of {v : theta(v, b_2, ..., b_d) = 0 for all basis tuples}; empty iff
// the form is nondegenerate. Concrete (parameter-free) forms only.
std::vector<std::vector<Value>> radical_basis(const Form& phi);
bool nondegenerate(const Form& phi);

Form diagonal_form(const std::vector<Value>& coeffs, unsigned degree,
                   std::vector<std::string> varnames = {});

Form scale(const Form& phi, const Value& a);
Form scale(const Form& phi, const SparsePoly& a);  // parametric scalar

// Pass iff phi2(M v) == phi1(v) as a polynomial identity. M must be square of
// the right size and nonsingular (singular witnesses are an error, not a
// failed check).
VerifyReport isometry_witness_check(const Form& phi1, const Form& phi2, const Matrix<SparsePoly>& M);
VerifyReport isometry_witness_check(const Form& phi1, const Form& phi2, const Matrix<Value>& M);

struct ValueSet {
  std::vector<Value> represented;  // D(phi), sorted by field rank
  std::vector<Value> subgroup;     // subgroup of the unit group generated by D(phi)
};

// Exhaustive D(phi) over a finite base field; enumeration size is capped by
// `budget` evaluations.
ValueSet value_set(const Form& phi, std::uint64_t budget = std::uint64_t{1} << 24);

class AlgebraStructure {
 public:
  // c[i][j][k]: coefficient of basis k in e_i * e_j; entries may mention the
  // parameters. A declared unit element is verified.
  AlgebraStructure(unsigned dim, std::vector<std::vector<std::vector<SparsePoly>>> c,
                   FieldPtr field, std::vector<std::string> params = {},
                   std::optional<std::vector<Value>> unit = std::nullopt);

  static AlgebraStructure from_constants(const std::vector<std::vector<std::vector<Value>>>& c,
                                         FieldPtr field,
                                         std::optional<std::vector<Value>> unit = std::nullopt);

  unsigned dim() const { return dim_; }
  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& params() const { return params_; }
  bool has_unit() const { return unit_.has_value(); }
  const std::vector<Value>& unit() const { return *unit_; }

  // Coordinates of x*y as bilinear polynomials in the given variable blocks.
  std::vector<SparsePoly> product_polys(const std::vector<std::string>& xvars,
                                        const std::vector<std::string>& yvars) const;

  // Matrix of y -> x0 * y over the polynomial ring (entries are constants for
  // parameter-free algebras).
  Matrix<SparsePoly> left_mult_matrix(const std::vector<Value>& x0) const;

 private:
  unsigned dim_;
  std::vector<std::vector<std::vector<SparsePoly>>> c_;
  FieldPtr field_;
  std::vector<std::string> params_;
  std::optional<std::vector<Value>> unit_;
};

// Pass iff phi(x*y) = phi(x)*phi(y) as an identity in 2n variables.
VerifyReport permits_composition_check(const Form& phi, const AlgebraStructure& algebra);

// Polynomial-level variant for parametric products: the product coordinates
// are given directly as bilinear polynomials in (xvars, yvars).
VerifyReport permits_composition_check_poly(const SparsePoly& phi_poly,
                                            const std::vector<std::string>& form_vars,
                                            const std::vector<SparsePoly>& product,
                                            const std::vector<std::string>& xvars,
                                            const std::vector<std::string>& yvars);

Form power_form(const Form& phi, unsigned m);
Form product_form(const Form& phi1, const Form& phi2);

// Structural classifier for forms whose construction makes the norm principle
// automatic.
struct FormStructure {
  enum class Origin {
    Diagonal,             // diagonal with arbitrary nonzero entries
    RepeatedCoefficient,  // <a, a, ..., a>
    DeterminantForm,      // determinant of d-by-d matrices
    SliceScaled,          // phi(a + u) = a * phi0(u)
    Other,
  };
  Origin origin = Origin::Other;
  unsigned degree = 0;
  unsigned dim = 0;
  std::uint64_t characteristic = 0;
};

enum class TrivialSnp { ViaFullGroup, ViaDthPowers, NotClassified };

struct TrivialSnpResult {
  TrivialSnp verdict = TrivialSnp::NotClassified;
  std::string rule;  // name of the matching structural rule
};

TrivialSnpResult classify_trivial_snp(const FormStructure& s);

}  // namespace normforms::forms
