// Transfers of Pfister forms along quadratic and cubic Kummer extensions,
// with the definitional conjugate-product oracle as ground truth and the
// displayed closed-form expressions tested per convention. The sign of the
// Pfister symbol and the pairing of the displayed argument products are not
// pinned down, so every combination is compared and the outcome recorded.
#pragma once

#include "normforms/forms/form.hpp"
#include "normforms/report.hpp"

namespace normforms::verify {

using exactalg::Rat;
using exactalg::SparsePoly;

enum class PfisterSign { MinusEntries, PlusEntries };  // <<a>> = <1,-a> or <1,a>

// Diagonal coefficients of the r-fold Pfister form over the parameter polys.
std::vector<SparsePoly> pfister_coeffs(const std::vector<SparsePoly>& entries, PfisterSign sign);

struct QuarticTransfer {
  forms::Form oracle;    // conjugate-product route (pair arithmetic)
  forms::Form transfer;  // multiplication-matrix determinant route
  VerifyReport agreement;
  VerifyReport conventions;
};

// Fully symbolic in a_1..a_r and c. r <= 2 for the exact comparisons.
QuarticTransfer example1_quartic(unsigned r, PfisterSign oracle_sign = PfisterSign::MinusEntries);

struct SexticTransfer {
  forms::Form oracle;             // determinant route over the rationals
  VerifyReport conjugate_agreement;  // triple-conjugate product over Q(omega)
  VerifyReport interpretations;
};

SexticTransfer example1_sextic(unsigned r, PfisterSign oracle_sign = PfisterSign::MinusEntries);

// Left-multiplication witness for the similarity factor phi(x0) of a
// composition form; the returned matrix M satisfies phi(M v) = phi(x0) phi(v).
exactalg::Matrix<SparsePoly> roundness_witness(const forms::Form& phi,
                                               const forms::AlgebraStructure& algebra,
                                               const std::vector<exactalg::Value>& x0);

// Full check: builds the witness and verifies the isometry identity.
VerifyReport roundness_check(const forms::Form& phi, const forms::AlgebraStructure& algebra,
                             const std::vector<exactalg::Value>& x0);

}  // namespace normforms::verify
