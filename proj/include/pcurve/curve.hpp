#ifndef PCURVE_CURVE_HPP
#define PCURVE_CURVE_HPP

#include <array>
#include <memory>

#include "pcurve/mpoly.hpp"
#include "pcurve/prime_field.hpp"
#include "pcurve/upoly.hpp"

namespace pcurve {

/// The shared symbolic coefficient ring F_p[a1..a5, u0, u1, u2]: curve
/// coefficients plus the three connection parameters.
std::shared_ptr<const VarSet> symbolic_vars();

enum SymVar : std::size_t { VA1 = 0, VA2, VA3, VA4, VA5, VU0, VU1, VU2 };

/// The genus-2 curve y^2 = g(x) = x^5 + a1 x^4 + ... + a5 over F_p, with the
/// derivation theta(f) = y * df/dx on the affine chart.  R is the coefficient
/// ring of the a_i: Fp for a concrete curve, MPoly for the generic one.
template <class R>
struct Curve {
    u64 p = 0;
    std::array<R, 5> a;  // a1..a5
    R one;
    R half;  // inv(2) in F_p, lifted into R
    bool nodal = false;

    /// x^5 + a1 x^4 + a2 x^3 + a3 x^2 + a4 x + a5.
    UPoly<R> g() const {
        std::vector<R> c{a[4], a[3], a[2], a[1], a[0], one};
        return UPoly<R>(std::move(c));
    }
};

/// Element a(x) + b(x)*y of the function ring, reduced by y^2 = g(x).
template <class R>
struct CurveFn {
    UPoly<R> a, b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool y_free() const { return b.is_zero(); }
    friend bool operator==(const CurveFn& x, const CurveFn& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const CurveFn& x, const CurveFn& y) { return !(x == y); }
    friend CurveFn operator+(const CurveFn& x, const CurveFn& y) {
        return CurveFn{x.a + y.a, x.b + y.b};
    }
    friend CurveFn operator-(const CurveFn& x, const CurveFn& y) {
        return CurveFn{x.a - y.a, x.b - y.b};
    }
    CurveFn operator-() const { return CurveFn{-a, -b}; }
    CurveFn times_int(u64 n) const { return CurveFn{a.times_int(n), b.times_int(n)}; }
};

template <class R>
CurveFn<R> fn_from_xpoly(UPoly<R> a) {
    return CurveFn<R>{std::move(a), UPoly<R>()};
}

/// Product in the function ring: y^2 rewrites to g(x).
template <class R>
CurveFn<R> fn_mul(const Curve<R>& curve, const CurveFn<R>& x, const CurveFn<R>& y) {
    return CurveFn<R>{x.a * y.a + (x.b * y.b) * curve.g(), x.a * y.b + x.b * y.a};
}

template <class R>
CurveFn<R> fn_scale(const R& s, const CurveFn<R>& x) {
    return CurveFn<R>{s * x.a, s * x.b};
}

/// theta(a + b*y) = (b'g + (1/2) b g') + a' y.
template <class R>
CurveFn<R> theta_apply(const Curve<R>& curve, const CurveFn<R>& f) {
    UPoly<R> g = curve.g();
    return CurveFn<R>{f.b.derivative() * g + curve.half * (f.b * g.derivative()),
                      f.a.derivative()};
}

template <class R>
CurveFn<R> theta_iterate(const Curve<R>& curve, CurveFn<R> f, u64 times) {
    for (u64 i = 0; i < times; ++i) f = theta_apply(curve, f);
    return f;
}

/// g_k(x) = theta^(k-1) x for odd k, by the recursion
/// g_k = g''_{k-2} g + (1/2) g'_{k-2} g', starting from g_1 = x.
template <class R>
UPoly<R> g_k(const Curve<R>& curve, u64 k) {
    if (k % 2 == 0) throw EvenIndex(k);
    UPoly<R> gk = UPoly<R>::monomial(curve.one, 1);  // g_1 = x
    UPoly<R> g = curve.g();
    UPoly<R> gp = g.derivative();
    for (u64 i = 3; i <= k; i += 2)
        gk = gk.derivative().derivative() * g + curve.half * (gk.derivative() * gp);
    return gk;
}

/// f_{theta^p} = g_p'(x): the function with theta^p = f * theta.
template <class R>
UPoly<R> f_theta_p(const Curve<R>& curve) {
    return g_k(curve, curve.p).derivative();
}

/// Checks theta^p(f) = f_{theta^p} * theta(f) and theta(f_{theta^p}) = 0.
template <class R>
bool theta_p_consistency(const Curve<R>& curve, const CurveFn<R>& f) {
    CurveFn<R> lhs = theta_iterate(curve, f, curve.p);
    CurveFn<R> ftp = fn_from_xpoly(f_theta_p(curve));
    CurveFn<R> rhs = fn_mul(curve, ftp, theta_apply(curve, f));
    if (!(lhs == rhs)) return false;
    return theta_apply(curve, ftp).is_zero();
}

/// Concrete curve over F_p; validates the discriminant condition.  In smooth
/// mode g must be squarefree; in nodal mode repeated roots are allowed but
/// only with multiplicity exactly 2.
Curve<Fp> make_curve(const PrimeField& field, const std::array<i64, 5>& a, bool nodal = false);

/// Generic curve with a1..a5 as variables of the shared symbolic ring.
Curve<MPoly> make_symbolic_curve(u64 p);

/// Whether g is squarefree (the smooth case).
bool curve_is_smooth(const Curve<Fp>& curve);

}  // namespace pcurve

#endif
