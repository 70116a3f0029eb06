#ifndef PCURVE_NC_EXPAND_HPP
#define PCURVE_NC_EXPAND_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "pcurve/prime_field.hpp"

namespace pcurve {

/// A word in the expansion of (T + theta)^n: the product
/// (theta^(i1-1) T) ... (theta^(il-1) T) theta^e, stored as the composition
/// (i1, ..., il) plus the trailing theta power e.  The weight
/// sum(i_j) + e is preserved by the rewriting rule theta*T -> (theta T) + T*theta.
struct Word {
    std::vector<u32> parts;
    u32 trailing = 0;

    friend bool operator<(const Word& a, const Word& b) {
        if (a.parts != b.parts) return a.parts < b.parts;
        return a.trailing < b.trailing;
    }
    friend bool operator==(const Word& a, const Word& b) {
        return a.parts == b.parts && a.trailing == b.trailing;
    }
    u64 weight() const {
        u64 w = trailing;
        for (u32 i : parts) w += i;
        return w;
    }
};

/// Integer-coefficient noncommutative polynomial in the T/theta words.
struct NCPoly {
    std::map<Word, i64> terms;
};

/// Full expansion of (T + theta)^n by direct repeated rewriting.
/// Homogeneous of weight n, includes trailing-theta words.
/// Bounded at n <= 13 (2^n words).
NCPoly expand_brute(u32 n);

/// Exact integer coefficient of the trailing-theta-free word in the
/// expansion of (T + theta)^n, as a product of binomials.
mpz_class coeff_closed_form(u32 n, const std::vector<u32>& word);

/// Exact coefficient of a word with trailing theta power e: binom(n, e)
/// times the coefficient of the truncated word at weight n - e.
mpz_class coeff_closed_form_trailing(u32 n, const std::vector<u32>& parts, u32 trailing);

/// Sum of coefficients over all permutations of the word that preserve the
/// relative order of the positions in lambda (lambda[j] marks position j).
/// Returned exactly as a rational; always integral in fact.
mpq_class ordered_coeff(u32 n, const std::vector<u32>& word, const std::vector<bool>& lambda);

/// Brute-force companion of ordered_coeff: literal summation over the
/// order-preserving permutations.
mpq_class ordered_coeff_brute(u32 n, const std::vector<u32>& word,
                              const std::vector<bool>& lambda);

/// The p-curvature expansion for an odd prime p: all 2^(p-1) compositions of
/// p with their (nonzero) coefficients mod p, in ascending lexicographic
/// word order.  The trailing correction term -f*T (with f the function
/// representing theta^p) is implicit and rendered by the printers.
struct PCFormula {
    u64 p;
    std::vector<std::pair<Fp, std::vector<u32>>> terms;
};

PCFormula pcurvature_formula(u64 p);

/// Text form, e.g. "T^3 + 2 T(t1 T) + (t1 T)T + (t2 T) - f T" for p = 3,
/// where (tk T) denotes theta applied k times to T.
std::string formula_text(const PCFormula& formula);

std::string word_text(const std::vector<u32>& parts);

}  // namespace pcurve

#endif
