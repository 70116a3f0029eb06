#include "pcurve/io.hpp"

#include <sstream>

namespace pcurve {

namespace {
std::shared_ptr<const VarSet> symbolic_vars_with_x() {
    static std::shared_ptr<const VarSet> vs =
        VarSet::make({"a1", "a2", "a3", "a4", "a5", "u0", "u1", "u2", "x"});
    return vs;
}
}  // namespace

MPoly xpoly_to_mpoly(const UPoly<MPoly>& f) {
    auto vs = symbolic_vars_with_x();
    MPoly out(vs);
    for (int i = 0; i <= f.degree(); ++i) {
        const MPoly& c = f.coeff(static_cast<std::size_t>(i));
        for (const auto& [m, cc] : c.terms()) {
            Mono mm(9, 0);
            for (std::size_t v = 0; v < 8; ++v) mm[v] = m[v];
            mm[8] = static_cast<u32>(i);
            out.add_term(mm, cc);
        }
    }
    return out;
}

json mpoly_json(const MPoly& f) {
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        json t;
        t["exp"] = it->first;
        t["coeff"] = it->second.value();
        terms.push_back(std::move(t));
    }
    json out;
    out["vars"] = json::array();
    if (f.vars())
        for (std::size_t i = 0; i < f.vars()->size(); ++i) out["vars"].push_back(f.vars()->name(i));
    out["terms"] = std::move(terms);
    return out;
}

json xpoly_json(const UPoly<MPoly>& f) { return mpoly_json(xpoly_to_mpoly(f)); }

json xpoly_json(const UPoly<Fp>& f, const std::string& var) {
    json terms = json::array();
    for (int i = f.degree(); i >= 0; --i) {
        Fp c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        json t;
        t["exp"] = {static_cast<u32>(i)};
        t["coeff"] = c.value();
        terms.push_back(std::move(t));
    }
    json out;
    out["vars"] = {var};
    out["terms"] = std::move(terms);
    return out;
}

json curvefn_json(const CurveFn<MPoly>& f) {
    json out;
    out["a"] = xpoly_json(f.a);
    out["b"] = xpoly_json(f.b);
    return out;
}

json curvefn_json(const CurveFn<Fp>& f, u64 p) {
    (void)p;
    json out;
    out["a"] = xpoly_json(f.a, "x");
    out["b"] = xpoly_json(f.b, "x");
    return out;
}

json formula_json(const PCFormula& formula) {
    json terms = json::array();
    for (const auto& [c, w] : formula.terms) {
        json t;
        t["coeff"] = c.value();
        t["word"] = w;
        terms.push_back(std::move(t));
    }
    json out;
    out["p"] = formula.p;
    out["terms"] = std::move(terms);
    return out;
}

json extelem_json(const ExtElem& a) {
    json out;
    json field;
    field["p"] = a.field() ? a.field()->p() : 0;
    field["degree"] = a.field() ? a.field()->degree() : 0;
    json mod = json::array();
    if (a.field())
        for (int i = 0; i <= a.field()->modulus().degree(); ++i)
            mod.push_back(a.field()->modulus().coeff(static_cast<std::size_t>(i)).value());
    field["modulus"] = std::move(mod);
    out["field"] = std::move(field);
    json rep = json::array();
    for (int i = 0; i <= a.rep().degree(); ++i)
        rep.push_back(a.rep().coeff(static_cast<std::size_t>(i)).value());
    out["rep"] = std::move(rep);
    return out;
}

json count_json(const CountResult& res, u64 p, bool with_total, bool with_solutions) {
    json out;
    out["p"] = p;
    out["e_p"] = res.distinct;
    out["with_multiplicity"] = res.with_multiplicity;
    out["general_value"] = (p * p * p - p) / 24;
    out["pipeline_degenerate"] = res.pipeline_degenerate;
    if (with_total) out["total"] = 16 * res.distinct;
    if (with_solutions) {
        json sols = json::array();
        for (const Solution& s : res.solutions) {
            json sj;
            sj["field_degree"] = s.field_degree;
            sj["multiplicity"] = s.multiplicity;
            json coords = json::array();
            for (const ExtElem& c : s.coords) coords.push_back(extelem_json(c));
            sj["u"] = std::move(coords);
            sols.push_back(std::move(sj));
        }
        out["solutions"] = std::move(sols);
    }
    return out;
}

json detpsi_json(const DetPsiMap& map) {
    json out;
    out["p"] = map.p;
    out["f1"] = mpoly_json(map.f1);
    out["f2"] = mpoly_json(map.f2);
    out["f3"] = mpoly_json(map.f3);
    out["support"] = {0, map.p, 2 * map.p};
    out["leading_term_certificate"] = leading_term_certificate(map);
    return out;
}

std::string xpoly_text(const UPoly<MPoly>& f) { return to_text(xpoly_to_mpoly(f)); }

std::string xpoly_text(const UPoly<Fp>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        Fp c = f.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c.value() != 1) {
            os << c.value();
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace pcurve
