#ifndef PCURVE_HURWITZ_HPP
#define PCURVE_HURWITZ_HPP

#include "pcurve/prime_field.hpp"

namespace pcurve {

/// Eigenvalue parameters at the two node pairs: 1 <= alpha_i, 2*alpha_i < p.
struct AlphaPair {
    u32 alpha1;
    u32 alpha2;
};

/// Number of admissible maps for one eigenvalue pair:
/// min{p - 2a1, p - 2a2, 2a1, 2a2}.
u64 maps_for_alpha(u64 p, const AlphaPair& pair);

/// Sum over all eigenvalue pairs; equals (p^3 - p)/24.
u64 total_count(u64 p);

/// The closed form (p^3 - p)/24.
u64 closed_form_count(u64 p);

/// Rearranged evaluation: sum over j of ((p+1)/2 - j)^2, which counts pairs
/// admitting at least j maps.
u64 square_sum_count(u64 p);

}  // namespace pcurve

#endif
