#ifndef PCURVE_FACTOR_HPP
#define PCURVE_FACTOR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <vector>

#include "pcurve/ext_field.hpp"
#include "pcurve/upoly.hpp"

namespace pcurve {

/// b^e mod f with an arbitrary-precision exponent (needed for splitting
/// exponents like (q^d - 1)/2 over large q).
template <class K>
UPoly<K> powmod_mpz(const UPoly<K>& b, const mpz_class& e, const UPoly<K>& f) {
    UPoly<K> r = UPoly<K>::constant(one_like(f.leading()));
    UPoly<K> base = divrem(b, f).second;
    mp_bitcnt_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (mp_bitcnt_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = divrem(r * base, f).second;
        base = divrem(base * base, f).second;
    }
    return r;
}

/// X |-> X^q mod f where q = |K|, computed as field_degree rounds of the
/// p-power map so the exponent never leaves machine size.
template <class K>
UPoly<K> q_power_map(UPoly<K> x, const UPoly<K>& f) {
    u64 p = char_of(f.leading());
    u32 k = field_degree(f.leading());
    for (u32 i = 0; i < k; ++i) x = powmod(x, p, f);
    return x;
}

inline mpz_class field_order_mpz(u64 p, u32 k) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), k);
    return q;
}

template <class K>
std::vector<u64> upoly_key(const UPoly<K>& f) {
    std::vector<u64> key;
    key.push_back(static_cast<u64>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        auto ck = canonical_key(f.coeff(static_cast<std::size_t>(i)));
        key.insert(key.end(), ck.begin(), ck.end());
    }
    return key;
}

template <class K>
K random_field_elem(const K& sample, std::mt19937_64& rng);

inline Fp random_field_elem(const Fp& sample, std::mt19937_64& rng) {
    return Fp(sample.p(), static_cast<i64>(rng() % sample.p()));
}

inline ExtElem random_field_elem(const ExtElem& sample, std::mt19937_64& rng) {
    const auto& F = sample.field();
    std::vector<Fp> c(F->degree());
    for (auto& ci : c) ci = Fp(F->p(), static_cast<i64>(rng() % F->p()));
    return ExtElem(F, UPoly<Fp>(std::move(c)));
}

/// Distinct-degree decomposition of a squarefree monic f: list of
/// (product of all irreducible factors of degree d, d), ascending in d.
template <class K>
std::vector<std::pair<UPoly<K>, u32>> distinct_degree(const UPoly<K>& f_in) {
    UPoly<K> f = monic(f_in);
    const K one = one_like(f.leading());
    UPoly<K> t = UPoly<K>::monomial(one, 1);
    std::vector<std::pair<UPoly<K>, u32>> out;
    UPoly<K> x = divrem(t, f).second;
    u32 d = 0;
    while (f.degree() > 0) {
        ++d;
        if (static_cast<int>(2 * d) > f.degree()) {
            // what remains is a single irreducible factor
            out.emplace_back(f, static_cast<u32>(f.degree()));
            break;
        }
        x = q_power_map(x, f);
        UPoly<K> g = gcd(x - t, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = exact_div(f, g);
            x = divrem(x, f).second;
        }
    }
    return out;
}

/// Cantor–Zassenhaus split of a monic squarefree product of irreducibles all
/// of degree d into the irreducibles themselves.  Deterministically seeded.
template <class K>
void equal_degree_split(const UPoly<K>& f, u32 d, std::mt19937_64& rng,
                        std::vector<UPoly<K>>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(monic(f));
        return;
    }
    const K one = one_like(f.leading());
    mpz_class e = (field_order_mpz(char_of(one), field_degree(one) * d) - 1) / 2;
    while (true) {
        std::vector<K> rc(static_cast<std::size_t>(f.degree()));
        for (auto& c : rc) c = random_field_elem(one, rng);
        UPoly<K> r(std::move(rc));
        if (r.degree() < 1) continue;
        UPoly<K> s = powmod_mpz(r, e, f) - UPoly<K>::constant(one);
        UPoly<K> g = gcd(s, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(exact_div(f, g), d, rng, out);
            return;
        }
    }
}

/// Full factorization into monic irreducibles with multiplicities,
/// deterministically ordered.
template <class K>
std::vector<std::pair<UPoly<K>, u32>> factor_irreducibles(const UPoly<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("factor_irreducibles");
    u64 p = char_of(f.leading());
    UPoly<K> sf = squarefree_part(f, p);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::vector<UPoly<K>> irr;
    for (auto& [prod, d] : distinct_degree(sf)) equal_degree_split(prod, d, rng, irr);
    std::sort(irr.begin(), irr.end(), [](const UPoly<K>& a, const UPoly<K>& b) {
        return upoly_key(a) < upoly_key(b);
    });
    std::vector<std::pair<UPoly<K>, u32>> out;
    for (auto& h : irr) {
        u32 m = 0;
        UPoly<K> rest = monic(f);
        while (true) {
            auto [q, r] = divrem(rest, h);
            if (!r.is_zero()) break;
            rest = q;
            ++m;
        }
        out.emplace_back(h, m);
    }
    return out;
}

/// Roots of f lying in the coefficient field K itself, with multiplicities,
/// sorted by canonical key.
template <class K>
std::vector<std::pair<K, u32>> roots_in_field(const UPoly<K>& f) {
    std::vector<std::pair<K, u32>> out;
    for (auto& [h, m] : factor_irreducibles(f)) {
        if (h.degree() != 1) continue;
        out.emplace_back(-(h.coeff(0) * h.coeff(1).inv()), m);
    }
    return out;
}

}  // namespace pcurve

#endif
