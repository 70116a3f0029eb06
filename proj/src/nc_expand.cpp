#include "pcurve/nc_expand.hpp"

#include <functional>
#include <numeric>
#include <sstream>

#include "pcurve/errors.hpp"

namespace pcurve {

NCPoly expand_brute(u32 n) {
    if (n < 1 || n > 13) throw TooLarge("expand_brute: n must be in [1, 13]");
    NCPoly cur;
    cur.terms[Word{}] = 1;  // empty product
    for (u32 step = 0; step < n; ++step) {
        NCPoly next;
        for (const auto& [w, c] : cur.terms) {
            // left-multiply by T: prepend a theta^0 T factor
            Word wt = w;
            wt.parts.insert(wt.parts.begin(), 1);
            next.terms[wt] += c;
            // left-multiply by theta and push it right:
            // theta*(A1...Al theta^e) = sum_j A1..(theta Aj)..Al theta^e
            //                           + A1...Al theta^(e+1)
            for (std::size_t j = 0; j < w.parts.size(); ++j) {
                Word wj = w;
                wj.parts[j] += 1;
                next.terms[wj] += c;
            }
            Word we = w;
            we.trailing += 1;
            next.terms[we] += c;
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

void check_composition(u32 n, const std::vector<u32>& word) {
    u64 sum = 0;
    for (u32 i : word) {
        if (i < 1) throw BadComposition("composition parts must be positive");
        sum += i;
    }
    if (sum != n) throw BadComposition("composition does not sum to n");
}

mpz_class binom(u64 n, u64 k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

mpz_class coeff_closed_form(u32 n, const std::vector<u32>& word) {
    check_composition(n, word);
    // peel parts from the right: coefficient picks up binom(n'-1, i_l - 1)
    // at each remaining weight n'
    mpz_class r = 1;
    u64 remaining = n;
    for (std::size_t j = word.size(); j-- > 0;) {
        r *= binom(remaining - 1, word[j] - 1);
        remaining -= word[j];
    }
    return r;
}

mpz_class coeff_closed_form_trailing(u32 n, const std::vector<u32>& parts, u32 trailing) {
    if (trailing > n) throw BadComposition("trailing power exceeds weight");
    return binom(n, trailing) * coeff_closed_form(n - trailing, parts);
}

mpq_class ordered_coeff(u32 n, const std::vector<u32>& word, const std::vector<bool>& lambda) {
    check_composition(n, word);
    if (lambda.size() != word.size())
        throw BadComposition("lambda mask must match the word length");
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), n);
    mpz_class den = 1;
    for (std::size_t j = 0; j < word.size(); ++j) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), word[j] - 1);
        den *= f;
        u64 shifted = word[j];
        if (lambda[j])
            for (std::size_t m = 0; m < j; ++m)
                if (lambda[m]) shifted += word[m];
        den *= static_cast<unsigned long>(shifted);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

mpq_class ordered_coeff_brute(u32 n, const std::vector<u32>& word,
                              const std::vector<bool>& lambda) {
    check_composition(n, word);
    if (lambda.size() != word.size())
        throw BadComposition("lambda mask must match the word length");
    std::size_t l = word.size();
    std::vector<u32> perm(l);
    std::iota(perm.begin(), perm.end(), 0);  // perm[t] = sigma^{-1}(t+1) - 1
    mpz_class total = 0;
    do {
        // sigma(i) has entries i_{sigma^{-1}(t)}; order preserved on lambda
        // means the positions of lambda indices appear in increasing order.
        i64 last = -1;
        bool ok = true;
        std::vector<std::size_t> where(l);
        for (std::size_t t = 0; t < l; ++t) where[perm[t]] = t;
        for (std::size_t j = 0; j < l; ++j) {
            if (!lambda[j]) continue;
            if (static_cast<i64>(where[j]) < last) {
                ok = false;
                break;
            }
            last = static_cast<i64>(where[j]);
        }
        if (!ok) continue;
        std::vector<u32> arranged(l);
        for (std::size_t t = 0; t < l; ++t) arranged[t] = word[perm[t]];
        total += coeff_closed_form(n, arranged);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return mpq_class(total);
}

PCFormula pcurvature_formula(u64 p) {
    if (p == 2) throw EvenPrime();
    if (!is_prime(p)) throw NotPrime(p);
    if (p > 101) throw TooLarge("pcurvature_formula: p must be <= 101");
    PCFormula out;
    out.p = p;
    std::vector<u32> word;
    std::function<void(u32)> rec = [&](u32 remaining) {
        if (remaining == 0) {
            mpz_class c = coeff_closed_form(static_cast<u32>(p), word);
            u64 cm = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
            if (cm == 0) throw std::logic_error("pcurvature_formula: vanishing coefficient");
            out.terms.emplace_back(Fp(p, static_cast<i64>(cm)), word);
            return;
        }
        for (u32 a = 1; a <= remaining; ++a) {
            word.push_back(a);
            rec(remaining - a);
            word.pop_back();
        }
    };
    rec(static_cast<u32>(p));
    return out;
}

std::string word_text(const std::vector<u32>& parts) {
    std::ostringstream os;
    std::size_t j = 0;
    while (j < parts.size()) {
        if (parts[j] == 1) {
            std::size_t run = 0;
            while (j < parts.size() && parts[j] == 1) ++run, ++j;
            os << "T";
            if (run > 1) os << "^" << run;
        } else {
            os << "(t" << parts[j] - 1 << " T)";
            ++j;
        }
    }
    return os.str();
}

std::string formula_text(const PCFormula& formula) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, w] : formula.terms) {
        if (!first) os << " + ";
        first = false;
        if (c.value() != 1) os << c.value() << " ";
        os << word_text(w);
    }
    os << " - f T";
    return os.str();
}

}  // namespace pcurve
