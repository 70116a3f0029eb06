#ifndef PCURVE_EXT_FIELD_HPP
#define PCURVE_EXT_FIELD_HPP

#include <memory>
#include <vector>

#include "pcurve/prime_field.hpp"
#include "pcurve/upoly.hpp"

namespace pcurve {

/// F_{p^k} presented as F_p[t]/(m) for a monic irreducible m of degree k.
/// Instances are shared and immutable; get() returns the canonical field for
/// (p, k), built on the lexicographically least irreducible modulus, cached
/// process-wide so that element fields can be compared by pointer.
class ExtField {
  public:
    static std::shared_ptr<const ExtField> get(u64 p, u32 k);
    /// Wrap an explicit monic modulus (checked irreducible).
    static std::shared_ptr<const ExtField> with_modulus(const UPoly<Fp>& m);

    u64 p() const { return p_; }
    u32 degree() const { return k_; }
    const UPoly<Fp>& modulus() const { return modulus_; }

  private:
    ExtField(u64 p, u32 k, UPoly<Fp> m) : p_(p), k_(k), modulus_(std::move(m)) {}
    u64 p_;
    u32 k_;
    UPoly<Fp> modulus_;
};

/// Lexicographically least monic irreducible of degree k over F_p,
/// comparing coefficient vectors low-degree-first.
UPoly<Fp> find_irreducible(const PrimeField& field, u32 k);

/// Distinct-degree irreducibility criterion: no factor of degree <= k/2.
bool is_irreducible(const UPoly<Fp>& f);

/// Element of F_{p^k}: residue class of a polynomial of degree < k.
/// Default-constructed elements are neutral zeros, as with Fp.
class ExtElem {
  public:
    ExtElem() = default;
    ExtElem(std::shared_ptr<const ExtField> F, UPoly<Fp> c);

    static ExtElem from_base(const std::shared_ptr<const ExtField>& F, Fp a);
    static ExtElem zero(const std::shared_ptr<const ExtField>& F);
    static ExtElem one(const std::shared_ptr<const ExtField>& F);
    /// The class of t.
    static ExtElem gen(const std::shared_ptr<const ExtField>& F);

    const std::shared_ptr<const ExtField>& field() const { return F_; }
    const UPoly<Fp>& rep() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }
    u64 p() const { return F_ ? F_->p() : 0; }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b);
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
    ExtElem operator-() const;
    ExtElem& operator+=(const ExtElem& b) { return *this = *this + b; }
    ExtElem& operator-=(const ExtElem& b) { return *this = *this - b; }
    ExtElem& operator*=(const ExtElem& b) { return *this = *this * b; }
    friend bool operator==(const ExtElem& a, const ExtElem& b);
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    ExtElem times_int(u64 m) const;
    ExtElem pow(u64 e) const;
    ExtElem inv() const;  // extended Euclid against the modulus

    /// Smallest d >= 1 with a^(p^d) = a, i.e. the degree of F_p(a) over F_p.
    u32 degree_over_prime() const;

  private:
    std::shared_ptr<const ExtField> F_;
    UPoly<Fp> c_;
};

/// a |-> a^p.
ExtElem frobenius(const ExtElem& a);

inline ExtElem one_like(const ExtElem& a) {
    if (!a.field()) throw FieldMismatch("one_like of neutral zero");
    return ExtElem::one(a.field());
}

/// p-th root in F_{p^k}: a^(p^(k-1)).
ExtElem pth_root_coeff(const ExtElem& a);

// Customization points used by the generic factoring code.
inline u64 char_of(const Fp& a) { return a.p(); }
inline u32 field_degree(const Fp&) { return 1; }
inline u64 char_of(const ExtElem& a) { return a.p(); }
inline u32 field_degree(const ExtElem& a) { return a.field() ? a.field()->degree() : 1; }

/// Total order key for deterministic sorting of field elements.
inline std::vector<u64> canonical_key(const Fp& a) { return {a.value()}; }
std::vector<u64> canonical_key(const ExtElem& a);

/// A root of f in an explicit extension field, with multiplicity.
struct RootInExt {
    ExtElem root;
    u32 multiplicity;
};

/// All roots of f in the algebraic closure, each returned in the canonical
/// F_{p^d} containing it; the sum of multiplicities (weighted by the degree
/// of each root's field orbit) equals deg f.
std::vector<RootInExt> roots_in_ext(const UPoly<Fp>& f);

/// Embed x in F_{p^k} into F_{p^K} for k | K; image of the degree-k generator
/// is chosen canonically (least root of the small modulus) and cached.
ExtElem embed(const ExtElem& x, const std::shared_ptr<const ExtField>& target);

/// Embed a prime-field element.
ExtElem embed(const Fp& x, const std::shared_ptr<const ExtField>& target);

}  // namespace pcurve

#endif
