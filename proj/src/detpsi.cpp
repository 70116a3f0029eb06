#include "pcurve/detpsi.hpp"

namespace pcurve {

DetPsiMap det_psi(u64 p) {
    if (p != 3 && p != 5 && p != 7) throw UnsupportedP(p);
    const Mat2<MPoly>& psi = symbolic_pcurvature_matrix(p);
    Curve<MPoly> curve = make_symbolic_curve(p);
    CurveFn<MPoly> det = mat_det(curve, psi);
    if (!det.y_free()) throw SupportViolation("det_psi: determinant has a y part");
    DetPsiMap out;
    out.p = p;
    auto vs = symbolic_vars();
    out.f1 = MPoly(vs);
    out.f2 = MPoly(vs);
    out.f3 = MPoly(vs);
    for (int i = 0; i <= det.a.degree(); ++i) {
        const MPoly& c = det.a.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (i == 0)
            out.f1 = c;
        else if (i == static_cast<int>(p))
            out.f2 = c;
        else if (i == static_cast<int>(2 * p))
            out.f3 = c;
        else
            throw SupportViolation("det_psi: nonzero coefficient at x^" + std::to_string(i));
    }
    return out;
}

bool leading_term_certificate(const DetPsiMap& map) {
    auto vs = symbolic_vars();
    Fp one = Fp::one(map.p);
    const std::vector<std::size_t> uvars{VU0, VU1, VU2};
    const MPoly* f[3] = {&map.f1, &map.f2, &map.f3};
    for (std::size_t i = 0; i < 3; ++i) {
        MPoly rest = *f[i] + MPoly::variable(vs, VU0 + i, one).pow(map.p);
        if (rest.total_degree_in(uvars) >= static_cast<int>(map.p)) return false;
    }
    return true;
}

CountResult nilpotent_locus_count(const Curve<Fp>& curve) {
    if (curve.p != 3) throw UnsupportedP(curve.p);
    DetPsiMap map = det_psi(3);
    std::vector<MPoly> sys;
    for (const MPoly* f : {&map.f1, &map.f2, &map.f3})
        sys.push_back(specialize_to_curve(*f, curve, unknown_vars3(), {0, 1, 2}));
    return triangular_count(sys, {0, 1, 2});
}

}  // namespace pcurve
