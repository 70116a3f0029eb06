#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pcurve/ext_field.hpp"
#include "pcurve/factor.hpp"
#include "pcurve/mpoly.hpp"
#include "pcurve/prime_field.hpp"
#include "pcurve/upoly.hpp"

using namespace pcurve;

namespace {

UPoly<Fp> random_upoly(u64 p, int maxdeg, std::mt19937_64& rng) {
    int d = static_cast<int>(rng() % static_cast<u64>(maxdeg + 1));
    std::vector<Fp> c;
    for (int i = 0; i <= d; ++i) c.push_back(Fp(p, static_cast<i64>(rng() % p)));
    return UPoly<Fp>(std::move(c));
}

UPoly<Fp> upoly_from(u64 p, std::initializer_list<i64> low_first) {
    std::vector<Fp> c;
    for (i64 v : low_first) c.push_back(Fp(p, v));
    return UPoly<Fp>(std::move(c));
}

}  // namespace

TEST_CASE("PrimeField validates p") {
    CHECK_THROWS_AS(PrimeField(2), EvenPrime);
    CHECK_THROWS_AS(PrimeField(1), NotPrime);
    CHECK_THROWS_AS(PrimeField(15), NotPrime);
    CHECK(PrimeField(3).p() == 3);
    CHECK(PrimeField(101).p() == 101);
}

TEST_CASE("Fp inverse examples and exhaustive check") {
    CHECK(Fp(5, 2).inv() == Fp(5, 3));
    CHECK(Fp(7, 2).inv() == Fp(7, 4));
    CHECK(Fp(3, 1).inv() == Fp(3, 1));
    CHECK_THROWS_AS(Fp(5, 0).inv(), ZeroInverse);
    for (u64 p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                  73, 79, 83, 89, 97, 101})
        for (u64 a = 1; a < p; ++a) CHECK(Fp(p, static_cast<i64>(a)).inv() * Fp(p, static_cast<i64>(a)) == Fp::one(p));
}

TEST_CASE("Fp ring laws on seeded samples") {
    for (u64 p : {3, 5, 7, 101}) {
        std::mt19937_64 rng(42);
        for (int i = 0; i < 1000; ++i) {
            Fp a(p, static_cast<i64>(rng() % p));
            Fp b(p, static_cast<i64>(rng() % p));
            Fp c(p, static_cast<i64>(rng() % p));
            CHECK((a + b) * c == a * c + b * c);
        }
        // square-and-multiply pth power vs p-fold product
        std::mt19937_64 rng2(7);
        for (int i = 0; i < 20; ++i) {
            Fp a(p, static_cast<i64>(rng2() % p));
            Fp prod = Fp::one(p);
            for (u64 j = 0; j < p; ++j) prod *= a;
            CHECK(a.pow(p) == prod);
            CHECK(a.pow(p) == a);  // Frobenius is the identity on F_p
        }
    }
}

TEST_CASE("find_irreducible canonical moduli") {
    PrimeField f3(3), f7(7);
    CHECK(find_irreducible(f3, 1) == upoly_from(3, {0, 1}));  // t

    // independent oracle for degree 2 over F_7: first monic quadratic with no
    // root, scanning coefficients low-degree-first
    {
        UPoly<Fp> expect;
        bool found = false;
        for (u64 c0 = 0; c0 < 7 && !found; ++c0)
            for (u64 c1 = 0; c1 < 7 && !found; ++c1) {
                UPoly<Fp> f = upoly_from(7, {static_cast<i64>(c0), static_cast<i64>(c1), 1});
                bool has_root = false;
                for (u64 x = 0; x < 7; ++x)
                    if (f.eval(Fp(7, static_cast<i64>(x))).is_zero()) has_root = true;
                if (!has_root) {
                    expect = f;
                    found = true;
                }
            }
        CHECK(find_irreducible(f7, 2) == expect);
        CHECK(find_irreducible(f7, 2) == upoly_from(7, {1, 0, 1}));  // t^2 + 1
    }

    // degree 14 over F_7: output passes the irreducibility test and is minimal
    UPoly<Fp> m14 = find_irreducible(f7, 14);
    CHECK(m14.degree() == 14);
    CHECK(is_irreducible(m14));
    for (u64 k : {1, 2, 3, 4, 5, 6, 8, 14}) CHECK(is_irreducible(find_irreducible(f7, static_cast<u32>(k))));
}

TEST_CASE("frobenius on extension fields") {
    auto F9 = ExtField::get(3, 2);
    ExtElem t = ExtElem::gen(F9);
    // repeated-multiplication oracle for the cube
    ExtElem t3 = t * t * t;
    CHECK(frobenius(t) == t.pow(3));
    CHECK(frobenius(t) == t3);
    CHECK(frobenius(t) != t);  // t generates F_9, so it moves under x -> x^p

    // base field elements are fixed
    for (i64 v = 0; v < 3; ++v) CHECK(frobenius(ExtElem::from_base(F9, Fp(3, v))) == ExtElem::from_base(F9, Fp(3, v)));

    // k-fold frobenius is the identity
    std::mt19937_64 rng(5);
    for (u64 p : {3, 5}) {
        for (u32 k : {2, 3}) {
            auto F = ExtField::get(p, k);
            for (int i = 0; i < 10; ++i) {
                ExtElem a = random_field_elem(ExtElem::one(F), rng);
                ExtElem b = a;
                for (u32 j = 0; j < k; ++j) b = frobenius(b);
                CHECK(b == a);
            }
        }
    }
}

TEST_CASE("ExtElem field laws and inverse") {
    std::mt19937_64 rng(11);
    auto F49 = ExtField::get(7, 2);
    for (int i = 0; i < 1000; ++i) {
        ExtElem a = random_field_elem(ExtElem::one(F49), rng);
        ExtElem b = random_field_elem(ExtElem::one(F49), rng);
        ExtElem c = random_field_elem(ExtElem::one(F49), rng);
        CHECK((a + b) * c == a * c + b * c);
    }
    for (int i = 0; i < 50; ++i) {
        ExtElem a = random_field_elem(ExtElem::one(F49), rng);
        if (a.is_zero()) continue;
        CHECK(a.inv() * a == ExtElem::one(F49));
    }
    // large-field smoke: F_{7^14}
    auto F = ExtField::get(7, 14);
    ExtElem t = ExtElem::gen(F);
    CHECK(t.inv() * t == ExtElem::one(F));
    ExtElem ft = t;
    for (int i = 0; i < 14; ++i) ft = frobenius(ft);
    CHECK(ft == t);
}

TEST_CASE("upoly gcd examples and division oracle") {
    // gcd(f, 0) = monic(f)
    UPoly<Fp> f = upoly_from(5, {1, 2, 3});
    CHECK(gcd(f, UPoly<Fp>()) == monic(f));
    // gcd(t^2 - 1, t - 1) = t - 1 over F_5
    CHECK(gcd(upoly_from(5, {-1, 0, 1}), upoly_from(5, {-1, 1})) == upoly_from(5, {-1, 1}));

    std::mt19937_64 rng(123);
    int tried = 0;
    while (tried < 200) {
        UPoly<Fp> a = random_upoly(7, 8, rng), b = random_upoly(7, 8, rng);
        if (a.is_zero() && b.is_zero()) continue;
        ++tried;
        UPoly<Fp> g = gcd(a, b);
        if (!a.is_zero()) CHECK(divrem(a, g).second.is_zero());
        if (!b.is_zero()) CHECK(divrem(b, g).second.is_zero());
    }
}

TEST_CASE("degree is additive under multiplication") {
    std::mt19937_64 rng(77);
    for (u64 p : {3, 5, 7}) {
        int done = 0;
        while (done < 100) {
            UPoly<Fp> a = random_upoly(p, 6, rng), b = random_upoly(p, 6, rng);
            if (a.is_zero() || b.is_zero()) continue;
            ++done;
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("squarefree part in characteristic p") {
    // (t-1)^3 over F_5 -> t - 1
    UPoly<Fp> t_minus_1 = upoly_from(5, {-1, 1});
    CHECK(squarefree_part(t_minus_1 * t_minus_1 * t_minus_1, 5) == t_minus_1);
    CHECK_THROWS_AS(squarefree_part(UPoly<Fp>(), 5), ZeroPolynomial);

    // t^p - a = (t - a^(1/p))^p over F_{p^k}
    {
        auto F9 = ExtField::get(3, 2);
        ExtElem a = ExtElem::gen(F9);
        UPoly<ExtElem> f({-a, ExtElem::zero(F9), ExtElem::zero(F9), ExtElem::one(F9)});
        UPoly<ExtElem> expect({-pth_root_coeff(a), ExtElem::one(F9)});
        CHECK(squarefree_part(f, 3) == expect);
        CHECK(pth_root_coeff(a).pow(3) == a);
    }

    // construct-then-check: products of distinct irreducibles with multiplicities
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        u64 p = (trial % 2) ? 3 : 5;
        PrimeField field(p);
        std::vector<UPoly<Fp>> irreducibles;
        for (u32 k = 1; k <= 3; ++k) irreducibles.push_back(find_irreducible(field, k));
        // a couple more linear ones
        irreducibles.push_back(upoly_from(p, {1, 1}));
        irreducibles.push_back(upoly_from(p, {2, 1}));
        UPoly<Fp> f = UPoly<Fp>::constant(Fp::one(p));
        UPoly<Fp> expect = UPoly<Fp>::constant(Fp::one(p));
        for (const auto& h : irreducibles) {
            u64 mult = rng() % 4;  // 0..3; multiplicity p occurs for p=3
            if (mult == 0) continue;
            expect = expect * h;
            for (u64 m = 0; m < mult; ++m) f = f * h;
        }
        if (f.degree() < 1) continue;
        CHECK(squarefree_part(f, p) == monic(expect));
    }
}

TEST_CASE("count_distinct_roots_closure: examples and exhaustive oracle") {
    // (t-1)^2 (t-2) over F_5 -> 2
    UPoly<Fp> f = upoly_from(5, {-1, 1}) * upoly_from(5, {-1, 1}) * upoly_from(5, {-2, 1});
    CHECK(count_distinct_roots_closure(f, 5) == 2);

    // seeded random vs exhaustive search through F_{3^k}
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 25) {
        UPoly<Fp> g = random_upoly(3, 6, rng);
        if (g.degree() < 1) continue;
        ++done;
        u64 brute = 0;
        for (u32 k = 1; k <= static_cast<u32>(g.degree()); ++k) {
            auto F = ExtField::get(3, k);
            // enumerate all of F_{3^k}; count roots whose degree is exactly k
            std::vector<u64> digits(k, 0);
            while (true) {
                std::vector<Fp> c;
                for (u64 d : digits) c.push_back(Fp(3, static_cast<i64>(d)));
                ExtElem x(F, UPoly<Fp>(std::move(c)));
                std::vector<ExtElem> lifted;
                for (int i = 0; i <= g.degree(); ++i)
                    lifted.push_back(ExtElem::from_base(F, g.coeff(static_cast<std::size_t>(i))));
                if (UPoly<ExtElem>(std::move(lifted)).eval(x).is_zero() &&
                    x.degree_over_prime() == k)
                    ++brute;
                u32 pos = k;
                bool carry = true;
                while (pos-- > 0) {
                    if (++digits[pos] < 3) {
                        carry = false;
                        break;
                    }
                    digits[pos] = 0;
                }
                if (carry) break;
            }
        }
        CHECK(count_distinct_roots_closure(g, 3) == brute);
    }
}

TEST_CASE("roots_in_ext: examples and consistency") {
    // t^2 + 1 over F_7: two simple roots in F_49 (7 = 3 mod 4)
    {
        auto roots = roots_in_ext(upoly_from(7, {1, 0, 1}));
        REQUIRE(roots.size() == 2);
        for (const auto& r : roots) {
            CHECK(r.multiplicity == 1);
            CHECK(r.root.field()->degree() == 2);
            CHECK(r.root * r.root == -ExtElem::one(r.root.field()));
        }
    }
    // t^3 - t over F_3: roots 0, 1, 2
    {
        auto roots = roots_in_ext(upoly_from(3, {0, -1, 0, 1}));
        REQUIRE(roots.size() == 3);
        std::vector<u64> values;
        for (const auto& r : roots) {
            CHECK(r.multiplicity == 1);
            CHECK(r.root.field()->degree() == 1);
            values.push_back(r.root.rep().is_zero() ? 0 : r.root.rep().coeff(0).value());
        }
        std::sort(values.begin(), values.end());
        CHECK(values == std::vector<u64>{0, 1, 2});
    }
    // weighted multiplicity sum equals the degree; roots satisfy f
    std::mt19937_64 rng(31337);
    int done = 0;
    while (done < 15) {
        UPoly<Fp> f = random_upoly(5, 6, rng);
        if (f.degree() < 1) continue;
        ++done;
        u64 total = 0;
        for (const auto& r : roots_in_ext(f)) {
            total += r.multiplicity;
            std::vector<ExtElem> lifted;
            for (int i = 0; i <= f.degree(); ++i)
                lifted.push_back(embed(f.coeff(static_cast<std::size_t>(i)), r.root.field()));
            CHECK(UPoly<ExtElem>(std::move(lifted)).eval(r.root).is_zero());
        }
        // each degree-d irreducible factor contributes d roots
        u64 expect = 0;
        for (const auto& [h, m] : factor_irreducibles(f)) expect += static_cast<u64>(h.degree()) * m;
        CHECK(total == expect);
        CHECK(expect == static_cast<u64>(f.degree()));
    }
}

TEST_CASE("embedding towers") {
    // F_9 into F_{3^4}
    auto F9 = ExtField::get(3, 2);
    auto F81 = ExtField::get(3, 4);
    std::mt19937_64 rng(55);
    for (int i = 0; i < 20; ++i) {
        ExtElem a = random_field_elem(ExtElem::one(F9), rng);
        ExtElem b = random_field_elem(ExtElem::one(F9), rng);
        CHECK(embed(a + b, F81) == embed(a, F81) + embed(b, F81));
        CHECK(embed(a * b, F81) == embed(a, F81) * embed(b, F81));
        CHECK(embed(a, F81).degree_over_prime() == a.degree_over_prime());
    }
}

TEST_CASE("MPoly ring laws") {
    auto vs = VarSet::make({"x", "y", "z"});
    std::mt19937_64 rng(404);
    u64 p = 5;
    auto random_mpoly = [&]() {
        MPoly f(vs);
        int nterms = static_cast<int>(rng() % 6);
        for (int i = 0; i < nterms; ++i) {
            Mono m{static_cast<u32>(rng() % 3), static_cast<u32>(rng() % 3),
                   static_cast<u32>(rng() % 3)};
            f.add_term(m, Fp(p, static_cast<i64>(rng() % p)));
        }
        return f;
    };
    for (int i = 0; i < 500; ++i) {
        MPoly a = random_mpoly(), b = random_mpoly(), c = random_mpoly();
        CHECK((a + b) * c == a * c + b * c);
    }
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_mpoly(), b = random_mpoly();
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("resultant examples") {
    u64 p = 7;
    auto vs = VarSet::make({"t", "a", "b"});
    Fp one = Fp::one(p);
    MPoly t = MPoly::variable(vs, 0, one);
    MPoly a = MPoly::variable(vs, 1, one);
    MPoly b = MPoly::variable(vs, 2, one);
    CHECK(resultant(t - a, t - b, 0) == a - b);
    // res_t(t^2 - c, t - d) = d^2 - c (c := a, d := b here)
    CHECK(resultant(t * t - a, t - b, 0) == b * b - a);
    CHECK_THROWS_AS(resultant(MPoly(vs), t - a, 0), DegenerateInput);
    CHECK_THROWS_AS(resultant(a, t - a, 0), DegenerateInput);
}

TEST_CASE("resultant vanishes exactly at common roots (brute force over F_9)") {
    u64 p = 3;
    auto vs = VarSet::make({"t", "x"});
    std::mt19937_64 rng(808);
    auto random_biv = [&](int dmax) {
        MPoly f(vs);
        for (int i = 0; i < 8; ++i) {
            Mono m{static_cast<u32>(rng() % (dmax + 1)), static_cast<u32>(rng() % (dmax + 1))};
            f.add_term(m, Fp(p, static_cast<i64>(rng() % p)));
        }
        return f;
    };
    auto F9 = ExtField::get(3, 2);
    std::vector<ExtElem> elems;
    for (u64 c0 = 0; c0 < 3; ++c0)
        for (u64 c1 = 0; c1 < 3; ++c1)
            elems.push_back(ExtElem(F9, UPoly<Fp>({Fp(3, static_cast<i64>(c0)),
                                                   Fp(3, static_cast<i64>(c1))})));
    int done = 0;
    while (done < 20) {
        MPoly f = random_biv(2), g = random_biv(2);
        if (f.degree_in(0) < 1 || g.degree_in(0) < 1) continue;
        ++done;
        MPoly res = resultant(f, g, 0);
        CHECK(res.degree_in(0) <= 0);  // t eliminated
        auto lift = [&](const Fp& c) { return embed(c, F9); };
        for (const ExtElem& x : elems) {
            bool common = false;
            for (const ExtElem& tval : elems) {
                std::vector<ExtElem> point{tval, x};
                if (f.eval(point, lift).is_zero() && g.eval(point, lift).is_zero()) common = true;
            }
            if (common) {
                std::vector<ExtElem> point{ExtElem::zero(F9), x};
                CHECK(res.eval(point, lift).is_zero());
            }
        }
    }
}

TEST_CASE("MPoly text rendering is canonical") {
    auto vs = VarSet::make({"a1", "u2"});
    Fp one = Fp::one(5);
    MPoly a1 = MPoly::variable(vs, 0, one);
    MPoly u2 = MPoly::variable(vs, 1, one);
    MPoly f = u2 * u2 + Fp(5, 3) * (a1 * u2) + MPoly::constant(vs, Fp(5, 4));
    // descending graded-lex: within degree 2, a1*u2 precedes u2^2
    CHECK(to_text(f) == "3*a1*u2 + u2^2 + 4");
    CHECK(to_text(MPoly(vs)) == "0");
}
