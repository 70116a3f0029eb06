#ifndef PCURVE_SOLVE_COUNT_HPP
#define PCURVE_SOLVE_COUNT_HPP

#include <vector>

#include "pcurve/connection.hpp"
#include "pcurve/ext_field.hpp"

namespace pcurve {

/// One solution point; coords[i] is the value of the i-th unknown (in the
/// order the solver was given), all embedded in one canonical F_{p^k}.
struct Solution {
    std::vector<ExtElem> coords;
    u32 field_degree;  // degree of the subfield the coordinates generate
    u64 multiplicity;  // product of root multiplicities along the triangular chain
};

struct CountResult {
    u64 distinct = 0;
    u64 with_multiplicity = 0;
    std::vector<Solution> solutions;
    bool pipeline_degenerate = false;  // set when a special-purpose pipeline fell
                                       // back to the generic path
};

/// Generic solver: count/enumerate the solutions over the algebraic closure
/// of a finite system of polynomials over F_p.  `order` lists the unknowns
/// (indices into the system's variable set); the last listed is eliminated
/// first by pairwise resultants, and the first listed carries the final
/// univariate eliminant.  Throws PositiveDimensional if the chain collapses.
CountResult triangular_count(const std::vector<MPoly>& system, const std::vector<std::size_t>& order);

/// p = 3: the unique vanishing-p-curvature class, with explicit solution
/// (u0, u1, u2) = (a3, 0, 0).
CountResult count_p3(const Curve<Fp>& curve);

/// The symbolic p = 5 eliminant: a quintic in u2 over F_5[a1..a5], derived by
/// solving the x^4 and x^3 coefficients of the vanishing system for u1 and
/// u0.  Also exposes the back-substitution expressions.
struct QuinticP5 {
    MPoly quintic;  // in u2 (and a1..a5)
    MPoly u1_expr;  // u1 in terms of u2, a
    MPoly u0_expr;  // u0 in terms of u2, a
};
const QuinticP5& quintic_p5_symbolic();

/// Specialization of the quintic to a concrete curve, as a univariate in u2.
UPoly<Fp> quintic_p5(const Curve<Fp>& curve);

/// p = 5 count: distinct roots of the quintic, with explicit solutions.
CountResult count_p5(const Curve<Fp>& curve);

/// The symbolic p = 7 system: four plane curves in (u1, u2) over F_7[a1..a5],
/// after solving the x^6 coefficient for u0 and removing the stated
/// multiples of the x^5 coefficient from the lower ones.
struct SystemP7 {
    MPoly h71, h72, h73, h74;
    MPoly u0_expr;  // u0 in terms of u1, u2, a
};
const SystemP7& system_p7_symbolic();

/// The four polynomials specialized to a concrete curve (variables u1, u2).
std::vector<MPoly> system_p7(const Curve<Fp>& curve);

/// p = 7 count, computed both by the substitution pipeline (eliminate u1
/// through the u1^2 term of the first polynomial, localize away from the
/// resulting denominator) and by the generic triangular path; the two must
/// agree.  If the pipeline's non-degeneracy check fails, the generic result
/// is returned with pipeline_degenerate set.
CountResult count_p7(const Curve<Fp>& curve);

/// The monic univariate eliminant in u2 produced by the p = 7 substitution
/// pipeline.  Throws DegeneratePipeline when the localization is invalid.
UPoly<Fp> eliminant_p7(const Curve<Fp>& curve);

/// Dispatch on p in {3, 5, 7}.
CountResult count_connections(const Curve<Fp>& curve);

/// Variable set ("u0","u1","u2") used for specialized vanishing systems.
std::shared_ptr<const VarSet> unknown_vars3();
/// Variable set ("u1","u2") used for the p = 7 plane-curve system.
std::shared_ptr<const VarSet> unknown_vars2();

/// Substitute the curve's a-values into a symbolic polynomial (over
/// symbolic_vars()) and rename the surviving u-variables into `target`;
/// `u_map[i]` gives the target index of u_i (or -1 if it must not occur).
MPoly specialize_to_curve(const MPoly& f, const Curve<Fp>& curve,
                          const std::shared_ptr<const VarSet>& target,
                          const std::array<int, 3>& u_map);

/// Evaluate a specialized system polynomial at a point (all coords in one
/// field); variable i takes coords[i].
ExtElem eval_system_poly(const MPoly& f, const std::vector<ExtElem>& coords);

/// View a one-variable MPoly as a UPoly over F_p.
UPoly<Fp> to_univariate(const MPoly& f, std::size_t var);

}  // namespace pcurve

#endif
