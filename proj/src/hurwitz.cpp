#include "pcurve/hurwitz.hpp"

#include <algorithm>

#include "pcurve/errors.hpp"

namespace pcurve {

namespace {
void check_odd_prime(u64 p) {
    if (p == 2 || !is_prime(p)) throw NotOddPrime(p);
}
}  // namespace

u64 maps_for_alpha(u64 p, const AlphaPair& pair) {
    check_odd_prime(p);
    for (u32 a : {pair.alpha1, pair.alpha2})
        if (a < 1 || 2ull * a >= p) throw BadAlpha("alpha out of range (1 <= 2*alpha < p)");
    u64 m = p - 2 * static_cast<u64>(pair.alpha1);
    m = std::min(m, p - 2 * static_cast<u64>(pair.alpha2));
    m = std::min(m, 2 * static_cast<u64>(pair.alpha1));
    m = std::min(m, 2 * static_cast<u64>(pair.alpha2));
    return m;
}

u64 total_count(u64 p) {
    check_odd_prime(p);
    u64 total = 0;
    for (u32 a1 = 1; 2ull * a1 < p; ++a1)
        for (u32 a2 = 1; 2ull * a2 < p; ++a2) total += maps_for_alpha(p, {a1, a2});
    return total;
}

u64 closed_form_count(u64 p) {
    check_odd_prime(p);
    return (p * p * p - p) / 24;
}

u64 square_sum_count(u64 p) {
    check_odd_prime(p);
    u64 total = 0;
    for (u64 j = 1; j <= (p - 1) / 2; ++j) {
        u64 c = (p + 1) / 2 - j;
        total += c * c;
    }
    return total;
}

}  // namespace pcurve
