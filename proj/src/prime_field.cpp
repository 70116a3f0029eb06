#include "pcurve/prime_field.hpp"

#include <ostream>

namespace pcurve {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Fp Fp::pow(u64 e) const {
    if (p_ == 0) return e == 0 ? Fp() : *this;  // neutral zero
    Fp r = Fp::one(p_);
    Fp b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Fp Fp::inv() const {
    if (v_ == 0) throw ZeroInverse();
    // p prime, so a^(p-2) inverts a.
    return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.value(); }

}  // namespace pcurve
