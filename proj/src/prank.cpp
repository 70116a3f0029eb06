#include "pcurve/prank.hpp"

namespace pcurve {

u32 classify_prank(const HVector<Fp>& h, u64 p) {
    Fp rank2 = h.h1 * h.h4 - h.h2 * h.h3;
    if (!rank2.is_zero()) return 2;
    Fp cond_a = h.h3.pow(p) - h.h2 * h.h4.pow(p - 1);
    Fp cond_b = h.h1.pow(p) * h.h4 - h.h2.pow(p + 1);
    if (!cond_a.is_zero() || !cond_b.is_zero()) return 1;
    return 0;
}

u32 hasse_witt_prank(const Curve<Fp>& curve) {
    if (!curve_is_smooth(curve)) throw SingularCurve("hasse_witt_prank: curve is singular");
    u64 p = curve.p;
    UPoly<Fp> h = curve.g().pow((p - 1) / 2);
    auto c = [&](u64 i) { return h.coeff(static_cast<std::size_t>(i)); };
    // M[i][j] = c_{ip - j}, i, j in {1, 2}
    Fp M[2][2] = {{c(p - 1), c(p - 2)}, {c(2 * p - 1), c(2 * p - 2)}};
    Fp Mp[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) Mp[i][j] = M[i][j].pow(p);
    Fp prod[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) prod[i][j] = M[i][0] * Mp[0][j] + M[i][1] * Mp[1][j];
    Fp det = prod[0][0] * prod[1][1] - prod[0][1] * prod[1][0];
    if (!det.is_zero()) return 2;
    bool all_zero = prod[0][0].is_zero() && prod[0][1].is_zero() && prod[1][0].is_zero() &&
                    prod[1][1].is_zero();
    return all_zero ? 0 : 1;
}

std::array<MPoly, 3> prank_strata(u64 p) {
    Curve<MPoly> curve = make_symbolic_curve(p);
    HVector<MPoly> h = h_vector(curve);
    MPoly rank2 = h.h1 * h.h4 - h.h2 * h.h3;
    MPoly cond_a = h.h3.pow(p) - h.h2 * h.h4.pow(p - 1);
    MPoly cond_b = h.h1.pow(p) * h.h4 - h.h2.pow(p + 1);
    return {monic_normalize(rank2), monic_normalize(cond_a), monic_normalize(cond_b)};
}

}  // namespace pcurve
