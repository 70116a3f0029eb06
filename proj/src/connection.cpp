#include "pcurve/connection.hpp"

#include <map>
#include <mutex>

namespace pcurve {

NormalizedConnection<Fp> make_connection(const Curve<Fp>& curve, const std::array<i64, 3>& u) {
    return NormalizedConnection<Fp>{curve, Fp(curve.p, u[0]), Fp(curve.p, u[1]),
                                    Fp(curve.p, u[2])};
}

NormalizedConnection<MPoly> make_symbolic_connection(u64 p) {
    Curve<MPoly> curve = make_symbolic_curve(p);
    auto vs = symbolic_vars();
    Fp one = Fp::one(p);
    return NormalizedConnection<MPoly>{curve, MPoly::variable(vs, VU0, one),
                                       MPoly::variable(vs, VU1, one),
                                       MPoly::variable(vs, VU2, one)};
}

const Mat2<MPoly>& symbolic_pcurvature_matrix(u64 p) {
    static std::mutex m;
    static std::map<u64, Mat2<MPoly>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, pcurvature_matrix(make_symbolic_connection(p))).first;
    return it->second;
}

bool entry_relations(u64 p) {
    if (p != 3 && p != 5 && p != 7) throw UnsupportedP(p);
    const Mat2<MPoly>& psi = symbolic_pcurvature_matrix(p);
    NormalizedConnection<MPoly> conn = make_symbolic_connection(p);
    const Curve<MPoly>& curve = conn.curve;
    CurveFn<MPoly> f12 = fn_from_xpoly(conn.f12());
    auto th = [&](const CurveFn<MPoly>& f) { return theta_apply(curve, f); };
    if (p == 3) {
        return psi.e11 == th(psi.e21) && psi.e12 == th(psi.e11) + fn_mul(curve, f12, psi.e21) &&
               psi.e22 == -psi.e11;
    }
    if (p == 5) {
        return psi.e22 == th(psi.e21).times_int(3) && psi.e11 == -psi.e22 &&
               psi.e12 == fn_mul(curve, f12, psi.e21) + th(th(psi.e21)).times_int(2);
    }
    return psi.e11 == th(psi.e21).times_int(3) &&
           psi.e12 == fn_mul(curve, f12, psi.e21) + th(th(psi.e21)).times_int(3) &&
           psi.e22 == -psi.e11;
}

std::vector<MPoly> vanishing_system(u64 p) {
    if (p != 3 && p != 5 && p != 7) throw UnsupportedP(p);
    const Mat2<MPoly>& psi = symbolic_pcurvature_matrix(p);
    if (!psi.e21.y_free())
        throw std::logic_error("vanishing_system: lower-left entry has a y part");
    std::vector<MPoly> coeffs;
    for (int i = 0; i <= psi.e21.a.degree(); ++i)
        coeffs.push_back(psi.e21.a.coeff(static_cast<std::size_t>(i)));
    return coeffs;
}

}  // namespace pcurve
