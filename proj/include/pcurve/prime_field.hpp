#ifndef PCURVE_PRIME_FIELD_HPP
#define PCURVE_PRIME_FIELD_HPP

#include <cstdint>
#include <iosfwd>

#include "pcurve/errors.hpp"

namespace pcurve {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Deterministic primality check by trial division (moduli here are small).
bool is_prime(u64 n);

/// The field F_p for an odd prime p.  Validates p at construction.
class PrimeField {
  public:
    explicit PrimeField(u64 p) : p_(p) {
        if (p == 2) throw EvenPrime();
        if (!is_prime(p)) throw NotPrime(p);
    }
    u64 p() const { return p_; }

  private:
    u64 p_;
};

/// Element of F_p in canonical form, value in [0, p).
///
/// A default-constructed Fp is the "neutral zero": it carries no modulus and
/// acts as the additive identity of whatever field it meets.  This lets
/// generic polynomial code accumulate into Fp{} without threading a field
/// handle through every call.
class Fp {
  public:
    Fp() = default;
    Fp(u64 p, i64 v) : p_(p) {
        i64 r = v % static_cast<i64>(p);
        if (r < 0) r += static_cast<i64>(p);
        v_ = static_cast<u64>(r);
    }

    static Fp zero(u64 p) { return Fp(p, 0); }
    static Fp one(u64 p) { return Fp(p, 1); }

    u64 value() const { return v_; }
    u64 p() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        u64 p = join(a, b);
        if (p == 0) return Fp();
        u64 s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return from_raw(p, s);
    }
    friend Fp operator-(Fp a, Fp b) {
        u64 p = join(a, b);
        if (p == 0) return Fp();
        u64 s = a.v_ + p - b.v_;
        if (s >= p) s -= p;
        return from_raw(p, s);
    }
    Fp operator-() const {
        if (p_ == 0) return Fp();
        return from_raw(p_, v_ == 0 ? 0 : p_ - v_);
    }
    friend Fp operator*(Fp a, Fp b) {
        u64 p = join(a, b);
        if (p == 0 || a.v_ == 0 || b.v_ == 0) return p == 0 ? Fp() : Fp::zero(p);
        return from_raw(p, (a.v_ * b.v_) % p);
    }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }

    /// Multiply by an integer scalar (reduced mod p).
    Fp times_int(u64 m) const {
        if (p_ == 0) return Fp();
        return from_raw(p_, (v_ * (m % p_)) % p_);
    }

    Fp pow(u64 e) const;
    Fp inv() const;

    friend bool operator==(Fp a, Fp b) {
        if (a.p_ == 0 || b.p_ == 0) return a.v_ == b.v_;
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(Fp a, Fp b) { return !(a == b); }

  private:
    static Fp from_raw(u64 p, u64 v) {
        Fp r;
        r.p_ = p;
        r.v_ = v;
        return r;
    }
    // Resolves the common modulus of two operands, treating neutral zeros
    // as belonging to the other side's field.
    static u64 join(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw FieldMismatch("Fp operands from different fields");
        return a.p_;
    }

    u64 v_ = 0;
    u64 p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& a);

}  // namespace pcurve

#endif
