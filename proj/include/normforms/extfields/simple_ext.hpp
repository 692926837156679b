// Simple field extensions base(alpha): regular representation, norm and
// trace, the norm form as a polynomial, transfers of forms along the
// extension, and the multiplication table as an algebra structure.
#pragma once

#include <string>
#include <vector>

#include "normforms/exactalg/field.hpp"
#include "normforms/exactalg/matrix.hpp"
#include "normforms/forms/form.hpp"

namespace normforms::extfields {

using exactalg::FieldPtr;
using exactalg::Matrix;
using exactalg::SparsePoly;
using exactalg::Value;

class SimpleExt {
 public:
  SimpleExt(const FieldPtr& base, std::vector<Value> monic_minpoly, std::string generator = "a");
  // Wraps an already-constructed extension field descriptor.
  explicit SimpleExt(FieldPtr extension_field);

  const FieldPtr& field() const { return ext_; }
  const FieldPtr& base() const { return ext_->base(); }
  unsigned degree() const { return ext_->degree(); }

  Value element(std::vector<Value> coords) const;
  Value generator() const;

  // Matrix of multiplication by a in the power basis, over the base field.
  Matrix<Value> regular_rep(const Value& a) const;
  Value norm(const Value& a) const;
  Value trace(const Value& a) const;

  // det(sum_i z_i rho(alpha^(i-1))) as a form of degree d in d variables
  // prefix1..prefixd.
  forms::Form norm_form(const std::string& var_prefix = "z") const;

  // Transfer of a form over this extension down to the base: substitute each
  // coordinate by a fresh block along the power basis and apply the norm
  // coefficient-wise via the multiplication matrix over the polynomial ring.
  // block_prefixes names the d fresh blocks; defaults to <var>_1..<var>_d.
  forms::Form transfer_form(const forms::Form& phi0,
                            const std::vector<std::string>& block_prefixes = {}) const;

  forms::AlgebraStructure multiplication_algebra() const;

 private:
  FieldPtr ext_;
};

}  // namespace normforms::extfields
