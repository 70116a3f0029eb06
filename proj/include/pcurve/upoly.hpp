#ifndef PCURVE_UPOLY_HPP
#define PCURVE_UPOLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pcurve/errors.hpp"
#include "pcurve/prime_field.hpp"

namespace pcurve {

/// Multiplicative identity in the same ring as a (which must not be a
/// neutral zero).  Overloads are provided next to each coefficient type.
inline Fp one_like(const Fp& a) {
    if (a.p() == 0) throw FieldMismatch("one_like of neutral zero");
    return Fp::one(a.p());
}

/// Dense univariate polynomial, coefficients low-degree first, no trailing
/// zeros.  K is any commutative ring type with value semantics providing
/// +, -, *, unary -, ==, is_zero(), times_int(u64); the operations that
/// genuinely need a field (divrem, gcd, monic, ...) additionally use inv().
template <class K>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<K> c) : c_(std::move(c)) { normalize(); }
    static UPoly constant(K c) { return UPoly(std::vector<K>{std::move(c)}); }
    /// c * t^k
    static UPoly monomial(K c, std::size_t k) {
        std::vector<K> v(k + 1);
        v[k] = std::move(c);
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K{}; }
    const std::vector<K>& coeffs() const { return c_; }
    K leading() const { return c_.empty() ? K{} : c_.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(r));
    }
    UPoly operator-() const {
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const K& s, const UPoly& a) {
        std::vector<K> r(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
        return UPoly(std::move(r));
    }
    UPoly& operator+=(const UPoly& b) { return *this = *this + b; }
    UPoly& operator-=(const UPoly& b) { return *this = *this - b; }
    UPoly& operator*=(const UPoly& b) { return *this = *this * b; }

    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i].times_int(i);
        return UPoly(std::move(r));
    }

    UPoly times_int(u64 n) const {
        std::vector<K> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].times_int(n);
        return UPoly(std::move(r));
    }

    K eval(const K& x) const {
        K acc{};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly pow(u64 e) const {
        if (e == 0) {
            if (is_zero()) throw ZeroPolynomial("pow");
            return UPoly::constant(one_like(leading()));
        }
        UPoly r, b = *this;
        bool started = false;
        while (e) {
            if (e & 1) {
                r = started ? r * b : b;
                started = true;
            }
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Multiply by t^k.
    UPoly shifted(std::size_t k) const {
        if (is_zero()) return UPoly();
        std::vector<K> r(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return UPoly(std::move(r));
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// ---- field-only operations -------------------------------------------------

template <class K>
UPoly<K> monic(const UPoly<K>& f) {
    if (f.is_zero()) return f;
    return f.leading().inv() * f;
}

/// Division with remainder over a field.
template <class K>
std::pair<UPoly<K>, UPoly<K>> divrem(const UPoly<K>& f, const UPoly<K>& g) {
    if (g.is_zero()) throw ZeroPolynomial("divrem");
    if (f.degree() < g.degree()) return {UPoly<K>(), f};
    K glead_inv = g.leading().inv();
    std::vector<K> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1);
    UPoly<K> r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - g.degree());
        K c = r.leading() * glead_inv;
        q[shift] = c;
        r -= UPoly<K>::monomial(c, shift) * g;
    }
    return {UPoly<K>(std::move(q)), r};
}

template <class K>
UPoly<K> exact_div(const UPoly<K>& f, const UPoly<K>& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

/// Monic gcd; gcd(f, 0) = monic(f).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// b^e mod f by repeated squaring.
template <class K>
UPoly<K> powmod(const UPoly<K>& b, u64 e, const UPoly<K>& f) {
    UPoly<K> r = UPoly<K>::constant(one_like(f.leading()));
    UPoly<K> base = divrem(b, f).second;
    while (e) {
        if (e & 1) r = divrem(r * base, f).second;
        base = divrem(base * base, f).second;
        e >>= 1;
    }
    return r;
}

// ---- characteristic-p squarefree machinery ----------------------------------

/// p-th root of a coefficient; identity on F_p, a^(p^(k-1)) on F_{p^k}.
inline Fp pth_root_coeff(const Fp& a) { return a; }

/// Write f(t) = h(t^p) and return h (coefficientwise p-th roots).
template <class K>
UPoly<K> deflate_p(const UPoly<K>& f, u64 p) {
    std::vector<K> h;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
        h.push_back(pth_root_coeff(f.coeff(static_cast<std::size_t>(i))));
    return UPoly<K>(std::move(h));
}

/// Squarefree part (radical): monic generator of the distinct-root locus.
/// Handles inseparable input by t^p-descent; f/gcd(f,f') alone is wrong when
/// factors occur with multiplicity divisible by p.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f, u64 p) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree_part");
    if (f.degree() == 0) return monic(f);
    UPoly<K> d = f.derivative();
    if (d.is_zero()) return squarefree_part(deflate_p(f, p), p);
    UPoly<K> g = gcd(f, d);
    if (g.degree() == 0) return monic(f);
    UPoly<K> w = exact_div(f, g);  // product of factors with multiplicity not divisible by p
    // Strip w's factors from g entirely; what survives has all multiplicities
    // divisible by p and deflates.
    UPoly<K> y = g;
    while (true) {
        UPoly<K> h = gcd(y, w);
        if (h.degree() == 0) break;
        y = exact_div(y, h);
    }
    if (y.degree() == 0) return monic(w);
    return monic(w * squarefree_part(y, p));
}

/// Number of distinct roots in the algebraic closure.
template <class K>
u64 count_distinct_roots_closure(const UPoly<K>& f, u64 p) {
    return static_cast<u64>(squarefree_part(f, p).degree());
}

}  // namespace pcurve

#endif
