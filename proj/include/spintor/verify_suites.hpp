#pragma once

#include "spintor/report.hpp"
#include "spintor/spinor_square.hpp"

namespace spintor {

// Random truncated/untruncated polyforms with small exact coefficients.
Polyform random_polyform(Signature sig, std::mt19937_64& rng,
                         int max_terms = 8, bool truncated_only = false);
PolyformD random_polyform_d(Signature sig, std::mt19937_64& rng,
                            int max_terms = 8, bool truncated_only = false);

// Exact-rational property suite over the Kahler-Atiyah algebra:
// associativity of <> and v, centrality of nu, the nu-action identity,
// the P_l morphism property, the trace formula and its cyclicity,
// transpose involutivity, projector decomposition and truncation inverse.
Report verify_algebra(Signature sig, int trials, std::uint64_t seed);

// Reconstruction-theorem suite: spinor squares satisfy both condition modes,
// perturbed non-squares fail, reconstruct o square = +-identity; in (2,1)
// squares are isotropic one-forms and isotropic one-forms reconstruct.
Report verify_reconstruction(Signature sig, int trials, std::uint64_t seed);

}  // namespace spintor
