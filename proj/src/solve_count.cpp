#include "pcurve/solve_count.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "pcurve/factor.hpp"

namespace pcurve {

std::shared_ptr<const VarSet> unknown_vars3() {
    static std::shared_ptr<const VarSet> vs = VarSet::make({"u0", "u1", "u2"});
    return vs;
}

std::shared_ptr<const VarSet> unknown_vars2() {
    static std::shared_ptr<const VarSet> vs = VarSet::make({"u1", "u2"});
    return vs;
}

MPoly specialize_to_curve(const MPoly& f, const Curve<Fp>& curve,
                          const std::shared_ptr<const VarSet>& target,
                          const std::array<int, 3>& u_map) {
    auto vs = symbolic_vars();
    MPoly g = f;
    for (std::size_t i = 0; i < 5; ++i)
        g = g.substitute(VA1 + i, MPoly::constant(vs, curve.a[i]));
    std::vector<int> mapping(8, -1);
    for (std::size_t i = 0; i < 3; ++i) mapping[VU0 + i] = u_map[i];
    return rename_vars(g, target, mapping);
}

UPoly<Fp> to_univariate(const MPoly& f, std::size_t var) {
    std::vector<Fp> coeffs;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t v = 0; v < m.size(); ++v)
            if (v != var && m[v] != 0)
                throw std::invalid_argument("to_univariate: extra variable " +
                                            f.vars()->name(v));
        if (coeffs.size() <= m[var]) coeffs.resize(m[var] + 1);
        coeffs[m[var]] = c;
    }
    return UPoly<Fp>(std::move(coeffs));
}

ExtElem eval_system_poly(const MPoly& f, const std::vector<ExtElem>& coords) {
    const auto& F = coords.front().field();
    return f.eval<ExtElem>(coords, [&](const Fp& c) { return embed(c, F); });
}

namespace {

ExtElem eval_upoly_at(const UPoly<Fp>& f, const ExtElem& x) {
    ExtElem acc = ExtElem::zero(x.field());
    for (int i = f.degree(); i >= 0; --i)
        acc = acc * x + embed(f.coeff(static_cast<std::size_t>(i)), x.field());
    return acc;
}

struct RootMult {
    ExtElem root;
    u64 mult;
};

/// All closure roots of a nonzero univariate over a canonical F_{p^k}; each
/// root lands in the canonical field of its degree over F_{p^k}.
std::vector<RootMult> closure_roots(const UPoly<ExtElem>& f) {
    std::vector<RootMult> out;
    if (f.degree() < 1) return out;
    u64 p = char_of(f.leading());
    u32 k = field_degree(f.leading());
    for (const auto& [h, m] : factor_irreducibles(f)) {
        if (h.degree() == 1) {
            out.push_back({-(h.coeff(0) * h.coeff(1).inv()), m});
        } else {
            auto big = ExtField::get(p, k * static_cast<u32>(h.degree()));
            std::vector<ExtElem> lifted;
            for (int i = 0; i <= h.degree(); ++i)
                lifted.push_back(embed(h.coeff(static_cast<std::size_t>(i)), big));
            auto roots = roots_in_field(UPoly<ExtElem>(std::move(lifted)));
            if (static_cast<int>(roots.size()) != h.degree())
                throw std::logic_error("closure_roots: factor did not split in its field");
            for (const auto& [r, m1] : roots) {
                (void)m1;
                out.push_back({r, m});
            }
        }
    }
    return out;
}

/// Substitute values for `fixed` variables (fixed[i] takes vals[i]) and view
/// the result as univariate in `target` over the vals' field.
UPoly<ExtElem> specialize_partial(const MPoly& f, const std::vector<std::size_t>& fixed,
                                  const std::vector<ExtElem>& vals, std::size_t target,
                                  const std::shared_ptr<const ExtField>& F) {
    std::vector<ExtElem> coeffs;
    for (const auto& [m, c] : f.terms()) {
        ExtElem t = embed(c, F);
        for (std::size_t i = 0; i < fixed.size(); ++i)
            for (u32 e = 0; e < m[fixed[i]]; ++e) t = t * vals[i];
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (v == target || m[v] == 0) continue;
            if (std::find(fixed.begin(), fixed.end(), v) == fixed.end())
                throw std::logic_error("specialize_partial: unexpected free variable");
        }
        u32 e = m[target];
        if (coeffs.size() <= e) coeffs.resize(e + 1, ExtElem::zero(F));
        coeffs[e] = coeffs[e] + t;
    }
    return UPoly<ExtElem>(std::move(coeffs));
}

void push_unique(std::vector<MPoly>& list, MPoly f) {
    for (const auto& g : list)
        if (g == f) return;
    list.push_back(std::move(f));
}

/// One elimination step: pairwise resultants in `var`, passing through the
/// polynomials that do not involve it.
std::vector<MPoly> eliminate_var(const std::vector<MPoly>& polys, std::size_t var,
                                 const std::string& var_name) {
    std::vector<MPoly> with, out;
    for (const MPoly& f : polys) {
        if (f.is_zero()) continue;
        if (f.degree_in(var) > 0)
            with.push_back(f);
        else
            push_unique(out, monic_normalize(f));
    }
    if (with.empty() && out.empty())
        throw PositiveDimensional("triangular_count: no constraints on " + var_name);
    for (std::size_t i = 0; i < with.size(); ++i)
        for (std::size_t j = i + 1; j < with.size(); ++j) {
            MPoly res = resultant(with[i], with[j], var);
            if (!res.is_zero()) push_unique(out, monic_normalize(res));
        }
    if (out.empty())
        throw PositiveDimensional("triangular_count: eliminant chain collapsed at " + var_name);
    return out;
}

struct Partial {
    std::vector<ExtElem> coords;  // values of order[0..i-1]
    u64 mult;
};

}  // namespace

CountResult triangular_count(const std::vector<MPoly>& system,
                             const std::vector<std::size_t>& order) {
    std::vector<MPoly> input;
    for (const MPoly& f : system)
        if (!f.is_zero()) push_unique(input, monic_normalize(f));
    if (input.empty())
        throw PositiveDimensional("triangular_count: system has no nonzero polynomials");
    u64 p = input.front().any_coeff().p();
    const auto& vars = input.front().vars();

    // elimination chain: chain[i] involves only order[0..i]
    std::vector<std::vector<MPoly>> chain(order.size());
    chain[order.size() - 1] = input;
    for (std::size_t i = order.size(); i-- > 1;)
        chain[i - 1] = eliminate_var(chain[i], order[i], vars->name(order[i]));

    auto F1 = ExtField::get(p, 1);
    std::vector<Partial> partials;
    {
        UPoly<ExtElem> G;
        for (const MPoly& f : chain[0]) {
            UPoly<ExtElem> u = specialize_partial(f, {}, {}, order[0], F1);
            G = G.is_zero() ? u : gcd(G, u);
        }
        if (G.is_zero())
            throw PositiveDimensional("triangular_count: zero eliminant");
        for (const auto& [root, mult] : closure_roots(G))
            partials.push_back(Partial{{root}, mult});
    }

    for (std::size_t stage = 1; stage < order.size(); ++stage) {
        std::vector<std::size_t> fixed(order.begin(), order.begin() + static_cast<long>(stage));
        std::vector<Partial> next;
        for (const Partial& part : partials) {
            const auto& F = part.coords.front().field();
            UPoly<ExtElem> G;
            bool any_nonzero = false;
            for (const MPoly& f : chain[stage]) {
                UPoly<ExtElem> u = specialize_partial(f, fixed, part.coords, order[stage], F);
                if (u.is_zero()) continue;
                any_nonzero = true;
                G = G.is_zero() ? u : gcd(G, u);
            }
            if (!any_nonzero)
                throw PositiveDimensional("triangular_count: fiber over a partial solution is positive-dimensional");
            if (G.degree() == 0) continue;  // candidate dies
            for (const auto& [root, mult] : closure_roots(G)) {
                Partial ext;
                const auto& FF = root.field();
                for (const ExtElem& c : part.coords) ext.coords.push_back(embed(c, FF));
                ext.coords.push_back(root);
                ext.mult = part.mult * mult;
                next.push_back(std::move(ext));
            }
        }
        partials = std::move(next);
    }

    CountResult res;
    for (const Partial& part : partials) {
        // back-substitution filter: every input polynomial must vanish
        std::vector<ExtElem> by_var(vars->size(), ExtElem::zero(part.coords.front().field()));
        for (std::size_t i = 0; i < order.size(); ++i) by_var[order[i]] = part.coords[i];
        bool ok = true;
        for (const MPoly& f : input)
            if (!eval_system_poly(f, by_var).is_zero()) ok = false;
        if (!ok) continue;
        Solution sol;
        sol.coords = part.coords;
        sol.multiplicity = part.mult;
        u32 d = 1;
        for (const ExtElem& c : part.coords) d = std::lcm(d, c.degree_over_prime());
        sol.field_degree = d;
        res.solutions.push_back(std::move(sol));
    }
    std::sort(res.solutions.begin(), res.solutions.end(), [](const Solution& a, const Solution& b) {
        if (a.field_degree != b.field_degree) return a.field_degree < b.field_degree;
        std::vector<u64> ka, kb;
        for (const auto& c : a.coords) {
            auto k = canonical_key(c);
            ka.push_back(k.size());
            ka.insert(ka.end(), k.begin(), k.end());
        }
        for (const auto& c : b.coords) {
            auto k = canonical_key(c);
            kb.push_back(k.size());
            kb.insert(kb.end(), k.begin(), k.end());
        }
        return ka < kb;
    });
    res.distinct = res.solutions.size();
    for (const Solution& s : res.solutions) res.with_multiplicity += s.multiplicity;
    return res;
}

namespace {

/// Solve f = 0 for `var` when f is linear in var with a constant unit
/// coefficient; returns the expression for var.
MPoly solve_linear_unit(const MPoly& f, std::size_t var) {
    if (f.degree_in(var) != 1)
        throw std::logic_error("solve_linear_unit: not linear in the variable");
    MPoly c1 = f.coeff_of(var, 1);
    if (!c1.is_constant() || c1.is_zero())
        throw std::logic_error("solve_linear_unit: coefficient is not a constant unit");
    return (-c1.constant_value().inv()) * f.coeff_of(var, 0);
}

struct AUTerm {
    i64 c;
    std::array<u32, 5> a;
    std::array<u32, 3> u;
};

MPoly build_au(u64 p, std::initializer_list<AUTerm> terms) {
    auto vs = symbolic_vars();
    MPoly f(vs);
    for (const AUTerm& t : terms) {
        Mono m(8, 0);
        for (std::size_t i = 0; i < 5; ++i) m[VA1 + i] = t.a[i];
        for (std::size_t i = 0; i < 3; ++i) m[VU0 + i] = t.u[i];
        f.add_term(m, Fp(p, t.c));
    }
    return f;
}

// The multiples of the x^5 coefficient removed from the x^2, x^1 and
// constant coefficients of the reduced p = 7 system.
MPoly multiple_x2_p7() {
    return build_au(7, {{5, {0, 0, 0, 0, 0}, {0, 0, 3}},
                        {5, {1, 0, 0, 0, 0}, {0, 0, 2}},
                        {2, {0, 0, 0, 0, 0}, {0, 1, 1}},
                        {5, {1, 1, 0, 0, 0}, {0, 0, 0}},
                        {4, {0, 0, 1, 0, 0}, {0, 0, 0}},
                        {2, {1, 0, 0, 0, 0}, {0, 1, 0}}});
}

MPoly multiple_x1_p7() {
    return build_au(7, {{5, {0, 0, 0, 0, 0}, {0, 1, 2}},
                        {5, {1, 0, 0, 0, 0}, {0, 1, 1}},
                        {6, {0, 0, 0, 1, 0}, {0, 0, 0}},
                        {2, {0, 0, 0, 0, 0}, {0, 2, 0}}});
}

MPoly multiple_x0_p7() {
    return build_au(7, {{6, {0, 0, 0, 0, 0}, {0, 0, 5}},
                        {5, {0, 0, 0, 0, 0}, {0, 1, 3}},
                        {3, {2, 0, 0, 0, 0}, {0, 0, 3}},
                        {2, {3, 0, 0, 0, 0}, {0, 0, 2}},
                        {5, {1, 1, 0, 0, 0}, {0, 0, 2}},
                        {2, {0, 0, 1, 0, 0}, {0, 0, 2}},
                        {6, {1, 0, 0, 0, 0}, {0, 1, 2}},
                        {5, {2, 1, 0, 0, 0}, {0, 0, 1}},
                        {2, {1, 0, 1, 0, 0}, {0, 0, 1}},
                        {2, {0, 0, 0, 1, 0}, {0, 0, 1}},
                        {1, {2, 0, 0, 0, 0}, {0, 1, 1}},
                        {2, {0, 1, 0, 0, 0}, {0, 1, 1}},
                        {2, {0, 0, 0, 0, 0}, {0, 2, 1}},
                        {6, {1, 0, 0, 1, 0}, {0, 0, 0}},
                        {4, {0, 0, 0, 0, 1}, {0, 0, 0}},
                        {4, {1, 1, 0, 0, 0}, {0, 1, 0}},
                        {3, {0, 0, 1, 0, 0}, {0, 1, 0}},
                        {3, {1, 0, 0, 0, 0}, {0, 2, 0}}});
}

}  // namespace

const QuinticP5& quintic_p5_symbolic() {
    static std::once_flag flag;
    static QuinticP5 q;
    std::call_once(flag, [] {
        std::vector<MPoly> sys = vanishing_system(5);
        if (sys.size() != 5)
            throw std::logic_error("quintic_p5_symbolic: unexpected x-degree of the system");
        q.u1_expr = solve_linear_unit(sys[4], VU1);
        q.u0_expr = solve_linear_unit(sys[3].substitute(VU1, q.u1_expr), VU0);
        auto reduce = [&](const MPoly& f) {
            return f.substitute(VU1, q.u1_expr).substitute(VU0, q.u0_expr);
        };
        if (!reduce(sys[2]).is_zero())
            throw std::logic_error("quintic_p5_symbolic: x^2 coefficient did not drop out");
        q.quintic = reduce(sys[1]);
        auto vs = symbolic_vars();
        Fp one = Fp::one(5);
        MPoly factor = MPoly::variable(vs, VU2, one) +
                       MPoly::constant(vs, Fp(5, 3)) * MPoly::variable(vs, VA1, one);
        if (reduce(sys[0]) != factor * q.quintic)
            throw std::logic_error(
                "quintic_p5_symbolic: constant coefficient is not (u2 + 3 a1) times the x "
                "coefficient");
    });
    return q;
}

UPoly<Fp> quintic_p5(const Curve<Fp>& curve) {
    if (curve.p != 5) throw UnsupportedP(curve.p);
    MPoly spec = specialize_to_curve(quintic_p5_symbolic().quintic, curve, unknown_vars3(),
                                     {0, 1, 2});
    return to_univariate(spec, 2);
}

CountResult count_p5(const Curve<Fp>& curve) {
    if (curve.p != 5) throw UnsupportedP(curve.p);
    if (!curve_is_smooth(curve)) throw SingularCurve("count_p5: curve is singular");
    const QuinticP5& sym = quintic_p5_symbolic();
    UPoly<Fp> quintic = quintic_p5(curve);
    MPoly u1s = specialize_to_curve(sym.u1_expr, curve, unknown_vars3(), {0, 1, 2});
    MPoly u0s = specialize_to_curve(sym.u0_expr, curve, unknown_vars3(), {0, 1, 2});
    UPoly<Fp> u1poly = to_univariate(u1s, 2);
    UPoly<Fp> u0poly = to_univariate(u0s, 2);
    CountResult res;
    for (const RootInExt& r : roots_in_ext(quintic)) {
        Solution sol;
        ExtElem u2 = r.root;
        sol.coords = {eval_upoly_at(u0poly, u2), eval_upoly_at(u1poly, u2), u2};
        sol.multiplicity = r.multiplicity;
        u32 d = 1;
        for (const ExtElem& c : sol.coords) d = std::lcm(d, c.degree_over_prime());
        sol.field_degree = d;
        res.solutions.push_back(std::move(sol));
    }
    res.distinct = res.solutions.size();
    for (const Solution& s : res.solutions) res.with_multiplicity += s.multiplicity;
    return res;
}

CountResult count_p3(const Curve<Fp>& curve) {
    if (curve.p != 3) throw UnsupportedP(curve.p);
    if (!curve_is_smooth(curve)) throw SingularCurve("count_p3: curve is singular");
    std::vector<MPoly> sys;
    for (const MPoly& f : vanishing_system(3))
        sys.push_back(specialize_to_curve(f, curve, unknown_vars3(), {0, 1, 2}));
    CountResult res = triangular_count(sys, {0, 1, 2});
    // the solved system is f12 = f_{theta^3}: the unique class (a3, 0, 0)
    if (res.distinct != 1)
        throw std::logic_error("count_p3: expected a unique solution");
    const Solution& s = res.solutions.front();
    auto F = s.coords.front().field();
    if (s.coords[0] != embed(curve.a[2], F) || !s.coords[1].is_zero() || !s.coords[2].is_zero())
        throw std::logic_error("count_p3: solution is not (a3, 0, 0)");
    return res;
}

const SystemP7& system_p7_symbolic() {
    static std::once_flag flag;
    static SystemP7 s;
    std::call_once(flag, [] {
        std::vector<MPoly> sys = vanishing_system(7);
        if (sys.size() != 7)
            throw std::logic_error("system_p7_symbolic: unexpected x-degree of the system");
        s.u0_expr = solve_linear_unit(sys[6], VU0);
        auto sub = [&](const MPoly& f) { return f.substitute(VU0, s.u0_expr); };
        s.h71 = sub(sys[5]);
        auto vs = symbolic_vars();
        Fp one = Fp::one(7);
        MPoly u1 = MPoly::variable(vs, VU1, one);
        MPoly u2 = MPoly::variable(vs, VU2, one);
        MPoly a1 = MPoly::variable(vs, VA1, one);
        MPoly a2 = MPoly::variable(vs, VA2, one);
        if (sub(sys[4]) != -(u2 * s.h71))
            throw std::logic_error("system_p7_symbolic: x^4 coefficient relation failed");
        if (sub(sys[3]) != -((u2 * u2 + a1 * u2 + MPoly::constant(vs, Fp(7, 3)) * a2 + u1) * s.h71))
            throw std::logic_error("system_p7_symbolic: x^3 coefficient relation failed");
        s.h72 = sub(sys[2]) + multiple_x2_p7() * s.h71;
        s.h73 = sub(sys[1]) + multiple_x1_p7() * s.h71;
        s.h74 = sub(sys[0]) + multiple_x0_p7() * s.h71;
    });
    return s;
}

std::vector<MPoly> system_p7(const Curve<Fp>& curve) {
    if (curve.p != 7) throw UnsupportedP(curve.p);
    const SystemP7& sym = system_p7_symbolic();
    std::vector<MPoly> out;
    for (const MPoly* f : {&sym.h71, &sym.h72, &sym.h73, &sym.h74})
        out.push_back(specialize_to_curve(*f, curve, unknown_vars2(), {-1, 0, 1}));
    return out;
}

namespace {

/// Remainder of f by g as univariate polynomials in `var` over F_p[other
/// vars]; g's leading coefficient in var must be a nonzero constant.
MPoly rem_by_unit_leading(const MPoly& f, const MPoly& g, std::size_t var) {
    int dg = g.degree_in(var);
    MPoly glead = g.coeff_of(var, static_cast<u32>(dg));
    if (!glead.is_constant() || glead.is_zero())
        throw std::logic_error("rem_by_unit_leading: leading coefficient is not a unit");
    Fp inv = glead.constant_value().inv();
    auto vs = f.vars();
    MPoly r = f;
    while (!r.is_zero() && r.degree_in(var) >= dg) {
        int dr = r.degree_in(var);
        MPoly c = inv * r.coeff_of(var, static_cast<u32>(dr));
        // c * var^(dr-dg) * g
        MPoly shift = MPoly::term(vs, [&] {
            Mono m(vs->size(), 0);
            m[var] = static_cast<u32>(dr - dg);
            return m;
        }(), Fp::one(c.any_coeff().p()));
        r -= c * shift * g;
    }
    return r;
}

}  // namespace

UPoly<Fp> eliminant_p7(const Curve<Fp>& curve) {
    std::vector<MPoly> sys = system_p7(curve);  // vars (u1, u2)
    const std::size_t U1 = 0, U2 = 1;
    const MPoly& h71 = sys[0];
    if (h71.degree_in(U1) != 2)
        throw DegeneratePipeline("eliminant_p7: first polynomial is not quadratic in u1");
    MPoly r2 = rem_by_unit_leading(sys[1], h71, U1);
    if (r2.degree_in(U1) > 1)
        throw std::logic_error("eliminant_p7: reduction left u1 degree > 1");
    MPoly A = r2.coeff_of(U1, 1);
    MPoly B = r2.coeff_of(U1, 0);
    if (A.is_zero()) throw DegeneratePipeline("eliminant_p7: u1 coefficient vanished");
    UPoly<Fp> Au = to_univariate(A, U2), Bu = to_univariate(B, U2);
    if (gcd(Au, Bu).degree() != 0)
        throw DegeneratePipeline("eliminant_p7: localization denominator can vanish on the locus");
    // substitute u1 = -B/A into each polynomial and take numerators
    UPoly<Fp> E;
    for (const MPoly& h : sys) {
        int d = h.degree_in(U1);
        UPoly<Fp> N;
        for (int k = 0; k <= d; ++k) {
            UPoly<Fp> ck = to_univariate(h.coeff_of(U1, static_cast<u32>(k)), U2);
            if (ck.is_zero()) continue;
            UPoly<Fp> termpoly = ck * (-Bu).pow(static_cast<u64>(k)) *
                                 Au.pow(static_cast<u64>(d - k));
            N += termpoly;
        }
        if (N.is_zero()) continue;
        E = E.is_zero() ? N : gcd(E, N);
    }
    if (E.is_zero()) throw DegeneratePipeline("eliminant_p7: all numerators vanished");
    E = monic(E);
    if (gcd(E, Au).degree() != 0)
        throw DegeneratePipeline("eliminant_p7: eliminant shares a root with the denominator");
    return E;
}

CountResult count_p7(const Curve<Fp>& curve) {
    if (curve.p != 7) throw UnsupportedP(curve.p);
    if (!curve_is_smooth(curve)) throw SingularCurve("count_p7: curve is singular");
    std::vector<MPoly> sys = system_p7(curve);
    CountResult generic = triangular_count(sys, {1, 0});  // eliminant in u2

    bool degenerate = false;
    u64 pipeline_distinct = 0;
    try {
        UPoly<Fp> E = eliminant_p7(curve);
        pipeline_distinct = E.degree() >= 1 ? count_distinct_roots_closure(E, 7) : 0;
    } catch (const DegeneratePipeline&) {
        degenerate = true;
    }
    if (!degenerate && pipeline_distinct != generic.distinct)
        throw std::logic_error("count_p7: pipeline and triangular counts disagree");

    // assemble (u0, u1, u2) triples from the (u2, u1) solver coordinates
    const SystemP7& sym = system_p7_symbolic();
    MPoly u0s = specialize_to_curve(sym.u0_expr, curve, unknown_vars2(), {-1, 0, 1});
    CountResult res;
    res.pipeline_degenerate = degenerate;
    res.distinct = generic.distinct;
    res.with_multiplicity = generic.with_multiplicity;
    for (const Solution& s : generic.solutions) {
        Solution t;
        ExtElem u2 = s.coords[0], u1 = s.coords[1];
        ExtElem u0 = eval_system_poly(u0s, {u1, u2});
        t.coords = {u0, u1, u2};
        t.multiplicity = s.multiplicity;
        u32 d = 1;
        for (const ExtElem& c : t.coords) d = std::lcm(d, c.degree_over_prime());
        t.field_degree = d;
        res.solutions.push_back(std::move(t));
    }
    return res;
}

CountResult count_connections(const Curve<Fp>& curve) {
    switch (curve.p) {
        case 3:
            return count_p3(curve);
        case 5:
            return count_p5(curve);
        case 7:
            return count_p7(curve);
        default:
            throw UnsupportedP(curve.p);
    }
}

}  // namespace pcurve
