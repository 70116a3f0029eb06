#include "pcurve/ext_field.hpp"

#include <map>
#include <mutex>

#include "pcurve/factor.hpp"

namespace pcurve {

namespace {
std::mutex g_field_mutex;
std::map<std::pair<u64, u32>, std::shared_ptr<const ExtField>>& field_cache() {
    static std::map<std::pair<u64, u32>, std::shared_ptr<const ExtField>> c;
    return c;
}
}  // namespace

bool is_irreducible(const UPoly<Fp>& f) {
    if (f.degree() < 1) return false;
    u64 p = f.leading().p();
    UPoly<Fp> fm = monic(f);
    UPoly<Fp> t = UPoly<Fp>::monomial(Fp::one(p), 1);
    UPoly<Fp> x = divrem(t, fm).second;
    u32 k = static_cast<u32>(fm.degree());
    for (u32 i = 1; 2 * i <= k; ++i) {
        x = powmod(x, p, fm);  // now x = t^(p^i) mod f
        if (gcd(x - t, fm).degree() != 0) return false;
    }
    return true;
}

UPoly<Fp> find_irreducible(const PrimeField& field, u32 k) {
    if (k < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
    u64 p = field.p();
    if (k == 1) {
        // already irreducible; the least has constant term 0
        return UPoly<Fp>({Fp::zero(p), Fp::one(p)});
    }
    // c0 = 0 makes t a factor, so start the low coefficient at 1.
    std::vector<u64> c(k, 0);
    c[0] = 1;
    while (true) {
        std::vector<Fp> coeffs;
        coeffs.reserve(k + 1);
        for (u32 i = 0; i < k; ++i) coeffs.push_back(Fp(p, static_cast<i64>(c[i])));
        coeffs.push_back(Fp::one(p));
        UPoly<Fp> f(std::move(coeffs));
        if (is_irreducible(f)) return f;
        // next candidate in low-degree-first lexicographic order
        u32 pos = k;
        while (pos-- > 0) {
            if (++c[pos] < p) break;
            c[pos] = 0;
            if (pos == 0) throw std::logic_error("find_irreducible: search exhausted");
        }
    }
}

std::shared_ptr<const ExtField> ExtField::get(u64 p, u32 k) {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto& cache = field_cache();
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    PrimeField field(p);
    auto F = std::shared_ptr<const ExtField>(new ExtField(p, k, find_irreducible(field, k)));
    cache.emplace(std::make_pair(p, k), F);
    return F;
}

std::shared_ptr<const ExtField> ExtField::with_modulus(const UPoly<Fp>& m) {
    if (!is_irreducible(m)) throw DegenerateInput("ExtField: modulus is reducible");
    UPoly<Fp> mm = monic(m);
    u64 p = mm.leading().p();
    PrimeField field(p);
    return std::shared_ptr<const ExtField>(
        new ExtField(p, static_cast<u32>(mm.degree()), std::move(mm)));
}

ExtElem::ExtElem(std::shared_ptr<const ExtField> F, UPoly<Fp> c) : F_(std::move(F)) {
    c_ = divrem(std::move(c), F_->modulus()).second;
}

ExtElem ExtElem::from_base(const std::shared_ptr<const ExtField>& F, Fp a) {
    return ExtElem(F, UPoly<Fp>::constant(a));
}
ExtElem ExtElem::zero(const std::shared_ptr<const ExtField>& F) {
    return ExtElem(F, UPoly<Fp>());
}
ExtElem ExtElem::one(const std::shared_ptr<const ExtField>& F) {
    return from_base(F, Fp::one(F->p()));
}
ExtElem ExtElem::gen(const std::shared_ptr<const ExtField>& F) {
    return ExtElem(F, UPoly<Fp>::monomial(Fp::one(F->p()), 1));
}

namespace {
const std::shared_ptr<const ExtField>& join_fields(const ExtElem& a, const ExtElem& b) {
    if (!a.field()) return b.field();
    if (!b.field()) return a.field();
    if (a.field() != b.field() && !(a.field()->p() == b.field()->p() &&
                                    a.field()->modulus() == b.field()->modulus()))
        throw FieldMismatch("ExtElem operands from different fields");
    return a.field();
}
}  // namespace

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    const auto& F = join_fields(a, b);
    if (!F) return ExtElem();
    return ExtElem(F, a.rep() + b.rep());
}
ExtElem operator-(const ExtElem& a, const ExtElem& b) {
    const auto& F = join_fields(a, b);
    if (!F) return ExtElem();
    return ExtElem(F, a.rep() - b.rep());
}
ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    const auto& F = join_fields(a, b);
    if (!F) return ExtElem();
    return ExtElem(F, a.rep() * b.rep());
}
ExtElem ExtElem::operator-() const {
    if (!F_) return ExtElem();
    return ExtElem(F_, -c_);
}
bool operator==(const ExtElem& a, const ExtElem& b) {
    if (!a.field() || !b.field()) return a.rep() == b.rep();
    join_fields(a, b);
    return a.rep() == b.rep();
}

ExtElem ExtElem::times_int(u64 m) const {
    if (!F_) return ExtElem();
    return from_base(F_, Fp(F_->p(), static_cast<i64>(m % F_->p()))) * *this;
}

ExtElem ExtElem::pow(u64 e) const {
    if (!F_) return e == 0 ? ExtElem() : *this;
    return ExtElem(F_, powmod(c_, e, F_->modulus()));
}

ExtElem ExtElem::inv() const {
    if (is_zero() || !F_) throw ZeroInverse();
    // extended Euclid: u*c + v*m = gcd
    UPoly<Fp> r0 = F_->modulus(), r1 = c_;
    UPoly<Fp> u0, u1 = UPoly<Fp>::constant(Fp::one(F_->p()));
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly<Fp> u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.degree() != 0) throw ZeroInverse();  // c shares a factor with the modulus
    return ExtElem(F_, r0.coeff(0).inv() * u0);
}

u32 ExtElem::degree_over_prime() const {
    if (!F_) return 1;
    u64 p = F_->p();
    ExtElem x = *this;
    for (u32 d = 1; d <= F_->degree(); ++d) {
        x = x.pow(p);
        if (x == *this) return d;
    }
    throw std::logic_error("degree_over_prime: Frobenius orbit did not close");
}

ExtElem frobenius(const ExtElem& a) {
    if (!a.field()) return a;
    return a.pow(a.field()->p());
}

ExtElem pth_root_coeff(const ExtElem& a) {
    if (!a.field()) return a;
    u64 p = a.field()->p();
    u32 k = a.field()->degree();
    ExtElem r = a;
    for (u32 i = 0; i + 1 < k; ++i) r = r.pow(p);
    return r;
}

std::vector<u64> canonical_key(const ExtElem& a) {
    std::vector<u64> key;
    for (int i = 0; i <= a.rep().degree(); ++i)
        key.push_back(a.rep().coeff(static_cast<std::size_t>(i)).value());
    return key;
}

std::vector<RootInExt> roots_in_ext(const UPoly<Fp>& f) {
    if (f.is_zero()) throw ZeroPolynomial("roots_in_ext");
    u64 p = f.leading().p();
    std::vector<RootInExt> out;
    for (auto& [h, mult] : factor_irreducibles(f)) {
        u32 d = static_cast<u32>(h.degree());
        auto F = ExtField::get(p, d);
        // lift h into F[z]; it splits completely there
        std::vector<ExtElem> lifted;
        for (int i = 0; i <= h.degree(); ++i)
            lifted.push_back(ExtElem::from_base(F, h.coeff(static_cast<std::size_t>(i))));
        auto roots = roots_in_field(UPoly<ExtElem>(std::move(lifted)));
        if (roots.size() != d)
            throw std::logic_error("roots_in_ext: irreducible factor did not split");
        for (auto& [r, m1] : roots) {
            (void)m1;
            out.push_back(RootInExt{r, mult});
        }
    }
    return out;
}

namespace {
std::mutex g_embed_mutex;
// (p, k, K) -> image of the degree-k canonical generator inside F_{p^K}
std::map<std::tuple<u64, u32, u32>, ExtElem>& embed_cache() {
    static std::map<std::tuple<u64, u32, u32>, ExtElem> c;
    return c;
}
}  // namespace

ExtElem embed(const Fp& x, const std::shared_ptr<const ExtField>& target) {
    return ExtElem::from_base(target, x);
}

ExtElem embed(const ExtElem& x, const std::shared_ptr<const ExtField>& target) {
    if (!x.field()) return ExtElem::zero(target);
    u32 k = x.field()->degree(), K = target->degree();
    u64 p = x.field()->p();
    if (p != target->p()) throw FieldMismatch("embed: different characteristic");
    if (x.field() == target || (k == K && x.field()->modulus() == target->modulus()))
        return ExtElem(target, x.rep());
    if (K % k != 0) throw FieldMismatch("embed: source degree does not divide target degree");
    if (x.field()->modulus() != ExtField::get(p, k)->modulus())
        throw FieldMismatch("embed: source field is not the canonical F_{p^k}");
    ExtElem gen_image;
    {
        std::lock_guard<std::mutex> lock(g_embed_mutex);
        auto& cache = embed_cache();
        auto it = cache.find({p, k, K});
        if (it != cache.end()) {
            gen_image = it->second;
        } else {
            // least root of the small modulus inside the target field
            std::vector<ExtElem> lifted;
            const auto& m = x.field()->modulus();
            for (int i = 0; i <= m.degree(); ++i)
                lifted.push_back(ExtElem::from_base(target, m.coeff(static_cast<std::size_t>(i))));
            auto roots = roots_in_field(UPoly<ExtElem>(std::move(lifted)));
            if (roots.empty()) throw std::logic_error("embed: modulus has no root in target");
            gen_image = roots.front().first;
            cache.emplace(std::make_tuple(p, k, K), gen_image);
        }
    }
    // evaluate x's representative at the generator image
    ExtElem acc = ExtElem::zero(target);
    for (int i = x.rep().degree(); i >= 0; --i)
        acc = acc * gen_image +
              ExtElem::from_base(target, x.rep().coeff(static_cast<std::size_t>(i)));
    return acc;
}

}  // namespace pcurve
