#ifndef PCURVE_DETPSI_HPP
#define PCURVE_DETPSI_HPP

#include "pcurve/connection.hpp"
#include "pcurve/solve_count.hpp"

namespace pcurve {

/// det of the p-curvature as a map A^3 -> A^3: the x-polynomial
/// f1 + f2 x^p + f3 x^(2p) with fi in F_p[a1..a5][u0,u1,u2].
struct DetPsiMap {
    u64 p;
    MPoly f1, f2, f3;
};

template <class R>
CurveFn<R> mat_det(const Curve<R>& curve, const Mat2<R>& m) {
    return fn_mul(curve, m.e11, m.e22) - fn_mul(curve, m.e12, m.e21);
}

/// Symbolic determinant of the p-curvature matrix; checks that the x-support
/// is exactly {0, p, 2p} (SupportViolation otherwise, which would signal a
/// computation bug).
DetPsiMap det_psi(u64 p);

/// deg_u(f_i + u_{i-1}^p) < p for all i: the leading term of f_i is
/// -u_{i-1}^p, which makes the map finite flat of degree p^3.
bool leading_term_certificate(const DetPsiMap& map);

/// Number of distinct (u0, u1, u2) over the closure with f1 = f2 = f3 = 0,
/// i.e. connections with nilpotent p-curvature.  Desk-scale at p = 3 only.
CountResult nilpotent_locus_count(const Curve<Fp>& curve);

}  // namespace pcurve

#endif
