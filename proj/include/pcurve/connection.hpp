#ifndef PCURVE_CONNECTION_HPP
#define PCURVE_CONNECTION_HPP

#include <vector>

#include "pcurve/curve.hpp"
#include "pcurve/nc_expand.hpp"

namespace pcurve {

/// 2x2 matrix over the curve function ring.
template <class R>
struct Mat2 {
    CurveFn<R> e11, e12, e21, e22;

    friend bool operator==(const Mat2& a, const Mat2& b) {
        return a.e11 == b.e11 && a.e12 == b.e12 && a.e21 == b.e21 && a.e22 == b.e22;
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return Mat2{a.e11 + b.e11, a.e12 + b.e12, a.e21 + b.e21, a.e22 + b.e22};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return Mat2{a.e11 - b.e11, a.e12 - b.e12, a.e21 - b.e21, a.e22 - b.e22};
    }
    CurveFn<R> trace() const { return e11 + e22; }
    bool is_zero() const {
        return e11.is_zero() && e12.is_zero() && e21.is_zero() && e22.is_zero();
    }
};

template <class R>
Mat2<R> mat_mul(const Curve<R>& curve, const Mat2<R>& a, const Mat2<R>& b) {
    return Mat2<R>{fn_mul(curve, a.e11, b.e11) + fn_mul(curve, a.e12, b.e21),
                   fn_mul(curve, a.e11, b.e12) + fn_mul(curve, a.e12, b.e22),
                   fn_mul(curve, a.e21, b.e11) + fn_mul(curve, a.e22, b.e21),
                   fn_mul(curve, a.e21, b.e12) + fn_mul(curve, a.e22, b.e22)};
}

template <class R>
Mat2<R> mat_scale_fn(const Curve<R>& curve, const CurveFn<R>& s, const Mat2<R>& a) {
    return Mat2<R>{fn_mul(curve, s, a.e11), fn_mul(curve, s, a.e12), fn_mul(curve, s, a.e21),
                   fn_mul(curve, s, a.e22)};
}

template <class R>
Mat2<R> mat_theta(const Curve<R>& curve, const Mat2<R>& a) {
    return Mat2<R>{theta_apply(curve, a.e11), theta_apply(curve, a.e12),
                   theta_apply(curve, a.e21), theta_apply(curve, a.e22)};
}

/// The normalized connection on the distinguished unstable bundle: matrix
/// [[0, f12], [1, 0]] with f12 = u0 + u1 x + u2 x^2 - (1/2) x^3.
template <class R>
struct NormalizedConnection {
    Curve<R> curve;
    R u0, u1, u2;

    UPoly<R> f12() const {
        return UPoly<R>(std::vector<R>{u0, u1, u2, -curve.half});
    }
    Mat2<R> matrix() const {
        Mat2<R> T;
        T.e12 = fn_from_xpoly(f12());
        T.e21 = fn_from_xpoly(UPoly<R>::constant(curve.one));
        return T;
    }
};

NormalizedConnection<Fp> make_connection(const Curve<Fp>& curve, const std::array<i64, 3>& u);

/// Fully symbolic connection: generic curve, generic u parameters.
NormalizedConnection<MPoly> make_symbolic_connection(u64 p);

/// The p-curvature matrix, by instantiating the universal weight-p word
/// expansion with T = [[0,f12],[1,0]] and the derivation theta, then
/// subtracting the theta^p correction f * T.
template <class R>
Mat2<R> pcurvature_matrix(const NormalizedConnection<R>& conn) {
    const Curve<R>& curve = conn.curve;
    u64 p = curve.p;
    if (p > 13) throw TooLarge("pcurvature_matrix: p must be <= 13");
    PCFormula formula = pcurvature_formula(p);
    std::vector<Mat2<R>> theta_pow;  // theta^m applied to T, m = 0..p-1
    theta_pow.push_back(conn.matrix());
    for (u64 m = 1; m < p; ++m) theta_pow.push_back(mat_theta(curve, theta_pow.back()));
    Mat2<R> acc;
    for (const auto& [coeff, word] : formula.terms) {
        Mat2<R> prod = theta_pow[word.front() - 1];
        for (std::size_t j = 1; j < word.size(); ++j)
            prod = mat_mul(curve, prod, theta_pow[word[j] - 1]);
        u64 c = coeff.value();
        Mat2<R> scaled{CurveFn<R>{prod.e11.a.times_int(c), prod.e11.b.times_int(c)},
                       CurveFn<R>{prod.e12.a.times_int(c), prod.e12.b.times_int(c)},
                       CurveFn<R>{prod.e21.a.times_int(c), prod.e21.b.times_int(c)},
                       CurveFn<R>{prod.e22.a.times_int(c), prod.e22.b.times_int(c)}};
        acc = acc + scaled;
    }
    CurveFn<R> ftp = fn_from_xpoly(f_theta_p(curve));
    return acc - mat_scale_fn(curve, ftp, theta_pow.front());
}

/// Apply the p-curvature as an operator to a section (s1, s2): iterate
/// s -> T s + theta(s) p times, then subtract f * (T s + theta(s)).
template <class R>
std::pair<CurveFn<R>, CurveFn<R>> operator_oracle(const NormalizedConnection<R>& conn,
                                                  const std::pair<CurveFn<R>, CurveFn<R>>& s) {
    const Curve<R>& curve = conn.curve;
    Mat2<R> T = conn.matrix();
    auto nabla = [&](const std::pair<CurveFn<R>, CurveFn<R>>& v) {
        return std::pair<CurveFn<R>, CurveFn<R>>{
            fn_mul(curve, T.e11, v.first) + fn_mul(curve, T.e12, v.second) +
                theta_apply(curve, v.first),
            fn_mul(curve, T.e21, v.first) + fn_mul(curve, T.e22, v.second) +
                theta_apply(curve, v.second)};
    };
    auto v = s;
    for (u64 i = 0; i < curve.p; ++i) v = nabla(v);
    auto first = nabla(s);
    CurveFn<R> ftp = fn_from_xpoly(f_theta_p(curve));
    return {v.first - fn_mul(curve, ftp, first.first), v.second - fn_mul(curve, ftp, first.second)};
}

/// Cached symbolic p-curvature matrix over F_p[a1..a5, u0, u1, u2].
const Mat2<MPoly>& symbolic_pcurvature_matrix(u64 p);

/// Verifies the inter-entry identities that reduce vanishing of the whole
/// matrix to vanishing of the lower-left entry (p in {3, 5, 7}).
bool entry_relations(u64 p);

/// The x-coefficients of the lower-left entry h21 of the symbolic
/// p-curvature matrix, ascending in x-degree; polynomials in u0,u1,u2 over
/// F_p[a1..a5].  Vanishing of all of them is equivalent to vanishing of the
/// full p-curvature.
std::vector<MPoly> vanishing_system(u64 p);

}  // namespace pcurve

#endif
