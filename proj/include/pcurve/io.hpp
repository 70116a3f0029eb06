#ifndef PCURVE_IO_HPP
#define PCURVE_IO_HPP

#include <json.hpp>

#include "pcurve/connection.hpp"
#include "pcurve/detpsi.hpp"
#include "pcurve/nc_expand.hpp"
#include "pcurve/solve_count.hpp"

namespace pcurve {

using nlohmann::json;

/// {"vars": [...], "terms": [{"exp": [...], "coeff": n}, ...]} with terms in
/// descending graded-lex order.  Bit-exact across runs.
json mpoly_json(const MPoly& f);

/// An x-polynomial with symbolic coefficients, as a polynomial over the
/// symbolic variables plus "x".
json xpoly_json(const UPoly<MPoly>& f);
json xpoly_json(const UPoly<Fp>& f, const std::string& var);

json curvefn_json(const CurveFn<MPoly>& f);
json curvefn_json(const CurveFn<Fp>& f, u64 p);

json formula_json(const PCFormula& formula);

json extelem_json(const ExtElem& a);
json count_json(const CountResult& res, u64 p, bool with_total, bool with_solutions);

json detpsi_json(const DetPsiMap& map);

/// Append "x" to the symbolic variables and fold an x-polynomial into a
/// single MPoly (used for canonical printing).
MPoly xpoly_to_mpoly(const UPoly<MPoly>& f);

std::string xpoly_text(const UPoly<MPoly>& f);
std::string xpoly_text(const UPoly<Fp>& f, const std::string& var);

}  // namespace pcurve

#endif
