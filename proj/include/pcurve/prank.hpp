#ifndef PCURVE_PRANK_HPP
#define PCURVE_PRANK_HPP

#include <array>

#include "pcurve/curve.hpp"

namespace pcurve {

/// The constant, linear, p-th and (p+1)-st coefficients of g_p(x); these are
/// the only ones that can be nonzero.
template <class R>
struct HVector {
    R h1, h2, h3, h4;
};

template <class R>
HVector<R> h_vector(const Curve<R>& curve) {
    UPoly<R> gp = g_k(curve, curve.p);
    return HVector<R>{gp.coeff(0), gp.coeff(1), gp.coeff(static_cast<std::size_t>(curve.p)),
                      gp.coeff(static_cast<std::size_t>(curve.p) + 1)};
}

/// p-rank of the Jacobian from the h-vector classifier:
///   2 if h1 h4 - h2 h3 != 0,
///   1 else if h3^p - h2 h4^(p-1) != 0 or h1^p h4 - h2^(p+1) != 0,
///   0 otherwise.
u32 classify_prank(const HVector<Fp>& h, u64 p);

/// Independent oracle: rank of M * M^(p) for the 2x2 matrix of coefficients
/// c_{ip-j} of g^((p-1)/2), entries raised to the p-th power in the second
/// factor.
u32 hasse_witt_prank(const Curve<Fp>& curve);

/// Rank-1 p-curvature of the connection c1 + c2 x on the trivial bundle:
/// the pair (constant coefficient, x^p coefficient),
/// (c1^p + c2 h1 - c1 h2, c2^p + c2 h3 - c1 h4).
template <class R>
std::pair<R, R> line_bundle_pcurvature(const Curve<R>& curve, const R& c1, const R& c2) {
    HVector<R> h = h_vector(curve);
    R c1p = c1, c2p = c2;
    for (u64 i = 1; i < curve.p; ++i) {
        c1p = c1p * c1;
        c2p = c2p * c2;
    }
    return {c1p + c2 * h.h1 - c1 * h.h2, c2p + c2 * h.h3 - c1 * h.h4};
}

/// The three stratum conditions as polynomials in a1..a5 over the symbolic
/// ring, monic-normalized in graded-lex order:
/// [rank-2 condition, first rank-1 condition, second rank-1 condition].
std::array<MPoly, 3> prank_strata(u64 p);

}  // namespace pcurve

#endif
