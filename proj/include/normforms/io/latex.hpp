// LaTeX rendering of polynomials and verification reports; presentational
// output for documentation of the verified identities.
#pragma once

#include <string>

#include "normforms/exactalg/sparsepoly.hpp"
#include "normforms/report.hpp"

namespace normforms::io {

// x1 -> x_{1}, exponents braced, coefficients as \frac when non-integral.
std::string latex_poly(const exactalg::SparsePoly& p);

// A summary block; for the quadratic-extension identities the symbolic
// represented-vector entries are typeset as an align* list.
std::string latex_report(const VerifyReport& r);

}  // namespace normforms::io
