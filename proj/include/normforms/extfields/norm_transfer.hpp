// Instance verification that norms of values represented by the norm form of
// F(alpha) transfer down a linearly disjoint extension K/F: the norm of
// phi_K(z) is computed once through K and once through F(alpha), with the
// coordinate vector of the second route as the explicit witness.
#pragma once

#include "normforms/extfields/simple_ext.hpp"
#include "normforms/report.hpp"

namespace normforms::extfields {

// Both extensions must be over the rationals; z is given by its coordinates
// over K in the power basis of alpha. Throws DisjointnessError when the
// minimal polynomial of alpha fails to stay irreducible over K, and rejects
// z = 0.
VerifyReport verify_norm_transfer_instance(const SimpleExt& alpha_ext, const SimpleExt& k_ext,
                                           const std::vector<Value>& z_coords_over_k);

}  // namespace normforms::extfields
