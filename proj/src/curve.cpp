#include "pcurve/curve.hpp"

#include "pcurve/factor.hpp"

namespace pcurve {

std::shared_ptr<const VarSet> symbolic_vars() {
    static std::shared_ptr<const VarSet> vs =
        VarSet::make({"a1", "a2", "a3", "a4", "a5", "u0", "u1", "u2"});
    return vs;
}

bool curve_is_smooth(const Curve<Fp>& curve) {
    UPoly<Fp> g = curve.g();
    return gcd(g, g.derivative()).degree() == 0;
}

Curve<Fp> make_curve(const PrimeField& field, const std::array<i64, 5>& a, bool nodal) {
    Curve<Fp> c;
    c.p = field.p();
    for (std::size_t i = 0; i < 5; ++i) c.a[i] = Fp(c.p, a[i]);
    c.one = Fp::one(c.p);
    c.half = Fp(c.p, 2).inv();
    c.nodal = nodal;
    if (!nodal) {
        if (!curve_is_smooth(c))
            throw SingularCurve("make_curve: g(x) is not squarefree");
    } else {
        for (const auto& [h, mult] : factor_irreducibles(c.g()))
            if (mult > 2)
                throw SingularCurve("make_curve: root of multiplicity " +
                                    std::to_string(mult) + " (worse than a node)");
    }
    return c;
}

Curve<MPoly> make_symbolic_curve(u64 p) {
    PrimeField field(p);
    auto vs = symbolic_vars();
    Curve<MPoly> c;
    c.p = p;
    Fp one = Fp::one(p);
    for (std::size_t i = 0; i < 5; ++i) c.a[i] = MPoly::variable(vs, VA1 + i, one);
    c.one = MPoly::constant(vs, one);
    c.half = MPoly::constant(vs, Fp(p, 2).inv());
    return c;
}

}  // namespace pcurve
