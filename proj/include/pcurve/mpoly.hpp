#ifndef PCURVE_MPOLY_HPP
#define PCURVE_MPOLY_HPP

#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pcurve/errors.hpp"
#include "pcurve/prime_field.hpp"
#include "pcurve/upoly.hpp"

namespace pcurve {

/// Fixed, ordered list of variable names for a polynomial ring.
class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i)
            for (std::size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarSet: duplicate variable " + names_[i]);
    }
    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::make_shared<const VarSet>(std::move(names));
    }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }
    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

  private:
    std::vector<std::string> names_;
};

using Mono = std::vector<u32>;

/// Graded lexicographic order: total degree first, ties left-to-right.
struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        u64 da = 0, db = 0;
        for (u32 e : a) da += e;
        for (u32 e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse multivariate polynomial over a coefficient field K (F_p in the
/// main instantiation) with a fixed variable list.  Terms are kept in
/// graded-lex order with no zero coefficients.  A default-constructed value
/// is the neutral zero, belonging to no ring until combined.
template <class K>
class MPolyT {
  public:
    MPolyT() = default;
    explicit MPolyT(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {}

    static MPolyT constant(std::shared_ptr<const VarSet> vars, K c) {
        MPolyT r(std::move(vars));
        if (!c.is_zero()) r.t_.emplace(Mono(r.vars_->size(), 0), std::move(c));
        return r;
    }
    static MPolyT variable(std::shared_ptr<const VarSet> vars, std::size_t idx, K one) {
        MPolyT r(std::move(vars));
        Mono m(r.vars_->size(), 0);
        m.at(idx) = 1;
        r.t_.emplace(std::move(m), std::move(one));
        return r;
    }
    static MPolyT term(std::shared_ptr<const VarSet> vars, Mono m, K c) {
        MPolyT r(std::move(vars));
        if (m.size() != r.vars_->size()) throw std::invalid_argument("MPolyT: bad exponent size");
        if (!c.is_zero()) r.t_.emplace(std::move(m), std::move(c));
        return r;
    }

    const std::shared_ptr<const VarSet>& vars() const { return vars_; }
    const std::map<Mono, K, GrlexLess>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        if (t_.empty()) return true;
        if (t_.size() != 1) return false;
        for (u32 e : t_.begin()->first)
            if (e) return false;
        return true;
    }
    K constant_value() const { return t_.empty() ? K{} : t_.begin()->second; }
    std::size_t term_count() const { return t_.size(); }

    K coeff(const Mono& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? K{} : it->second;
    }
    /// Leading (grlex-greatest) term.
    std::pair<Mono, K> leading_term() const {
        if (t_.empty()) throw ZeroPolynomial("leading_term");
        auto it = std::prev(t_.end());
        return {it->first, it->second};
    }

    friend MPolyT operator+(const MPolyT& a, const MPolyT& b) {
        const auto& vars = join(a, b);
        if (!vars) return MPolyT();
        MPolyT r(vars);
        r.t_ = a.t_;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend MPolyT operator-(const MPolyT& a, const MPolyT& b) { return a + (-b); }
    MPolyT operator-() const {
        MPolyT r(vars_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }
    friend MPolyT operator*(const MPolyT& a, const MPolyT& b) {
        const auto& vars = join(a, b);
        if (!vars) return MPolyT();
        MPolyT r(vars);
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) {
                Mono m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    friend MPolyT operator*(const K& s, const MPolyT& a) {
        MPolyT r(a.vars_);
        for (const auto& [m, c] : a.t_) {
            K cc = s * c;
            if (!cc.is_zero()) r.t_.emplace(m, std::move(cc));
        }
        return r;
    }
    MPolyT& operator+=(const MPolyT& b) { return *this = *this + b; }
    MPolyT& operator-=(const MPolyT& b) { return *this = *this - b; }
    MPolyT& operator*=(const MPolyT& b) { return *this = *this * b; }

    MPolyT times_int(u64 n) const {
        MPolyT r(vars_);
        for (const auto& [m, c] : t_) {
            K cc = c.times_int(n);
            if (!cc.is_zero()) r.t_.emplace(m, std::move(cc));
        }
        return r;
    }

    MPolyT pow(u64 e) const {
        if (e == 0) {
            if (!vars_) throw ZeroPolynomial("pow of neutral zero");
            return constant(vars_, one_like(any_coeff()));
        }
        MPolyT r, b = *this;
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

    friend bool operator==(const MPolyT& a, const MPolyT& b) {
        if (a.t_.size() != b.t_.size()) return false;
        auto ia = a.t_.begin();
        auto ib = b.t_.begin();
        for (; ia != a.t_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const MPolyT& a, const MPolyT& b) { return !(a == b); }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : t_) {
            (void)c;
            d = std::max(d, static_cast<int>(m[var]));
        }
        return d;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) {
            (void)c;
            u64 s = 0;
            for (u32 e : m) s += e;
            d = std::max(d, static_cast<int>(s));
        }
        return d;
    }
    int total_degree_in(const std::vector<std::size_t>& subset) const {
        int d = -1;
        for (const auto& [m, c] : t_) {
            (void)c;
            u64 s = 0;
            for (std::size_t v : subset) s += m[v];
            d = std::max(d, static_cast<int>(s));
        }
        return d;
    }

    /// Coefficient of var^power, with that variable's exponent zeroed.
    MPolyT coeff_of(std::size_t var, u32 power) const {
        MPolyT r(vars_);
        for (const auto& [m, c] : t_) {
            if (m[var] != power) continue;
            Mono mm = m;
            mm[var] = 0;
            r.t_.emplace(std::move(mm), c);
        }
        return r;
    }

    /// View as a univariate polynomial in var with MPolyT coefficients.
    UPoly<MPolyT> as_upoly_in(std::size_t var) const {
        int d = degree_in(var);
        std::vector<MPolyT> coeffs(static_cast<std::size_t>(d + 1), MPolyT(vars_));
        for (const auto& [m, c] : t_) {
            Mono mm = m;
            u32 e = mm[var];
            mm[var] = 0;
            coeffs[e].add_term(mm, c);
        }
        return UPoly<MPolyT>(std::move(coeffs));
    }

    static MPolyT from_upoly_in(const UPoly<MPolyT>& f, std::size_t var,
                                std::shared_ptr<const VarSet> vars) {
        MPolyT r(std::move(vars));
        for (int i = 0; i <= f.degree(); ++i) {
            const MPolyT& c = f.coeff(static_cast<std::size_t>(i));
            for (const auto& [m, cc] : c.t_) {
                Mono mm = m;
                mm[var] += static_cast<u32>(i);
                r.add_term(mm, cc);
            }
        }
        return r;
    }

    MPolyT derivative(std::size_t var) const {
        MPolyT r(vars_);
        for (const auto& [m, c] : t_) {
            if (m[var] == 0) continue;
            Mono mm = m;
            mm[var] -= 1;
            r.add_term(mm, c.times_int(m[var]));
        }
        return r;
    }

    MPolyT substitute(std::size_t var, const MPolyT& value) const {
        UPoly<MPolyT> f = as_upoly_in(var);
        MPolyT acc(vars_);
        for (int i = f.degree(); i >= 0; --i) acc = acc * value + f.coeff(static_cast<std::size_t>(i));
        return acc;
    }

    /// Full evaluation into a ring E given values for every variable.
    /// Lift maps a coefficient K into E.
    template <class E, class Lift>
    E eval(const std::vector<E>& values, Lift lift) const {
        E acc{};
        for (const auto& [m, c] : t_) {
            E term = lift(c);
            for (std::size_t v = 0; v < m.size(); ++v)
                for (u32 e = 0; e < m[v]; ++e) term = term * values[v];
            acc = acc + term;
        }
        return acc;
    }

    K any_coeff() const {
        if (t_.empty()) throw ZeroPolynomial("any_coeff");
        return t_.begin()->second;
    }

    void add_term(const Mono& m, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

  private:
    static const std::shared_ptr<const VarSet>& join(const MPolyT& a, const MPolyT& b) {
        if (!a.vars_) return b.vars_;
        if (!b.vars_) return a.vars_;
        if (a.vars_ != b.vars_ && !(*a.vars_ == *b.vars_))
            throw FieldMismatch("MPolyT operands over different variable sets");
        return a.vars_;
    }

    std::shared_ptr<const VarSet> vars_;
    std::map<Mono, K, GrlexLess> t_;
};

using MPoly = MPolyT<Fp>;

template <class K>
MPolyT<K> one_like(const MPolyT<K>& a) {
    if (!a.vars()) throw ZeroPolynomial("one_like of neutral zero");
    return MPolyT<K>::constant(a.vars(), one_like(a.any_coeff()));
}

/// Exact division (throws if b does not divide a).  Leading-term division in
/// grlex order terminates with zero remainder precisely when b | a.
template <class K>
MPolyT<K> exact_divide(const MPolyT<K>& a, const MPolyT<K>& b) {
    if (b.is_zero()) throw ZeroPolynomial("exact_divide");
    MPolyT<K> q(a.vars() ? a.vars() : b.vars());
    if (a.is_zero()) return q;
    auto [bm, bc] = b.leading_term();
    K bc_inv = bc.inv();
    MPolyT<K> r = a;
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        Mono qm(rm.size());
        for (std::size_t i = 0; i < rm.size(); ++i) {
            if (rm[i] < bm[i]) throw std::domain_error("exact_divide: not divisible");
            qm[i] = rm[i] - bm[i];
        }
        K qc = rc * bc_inv;
        MPolyT<K> qt = MPolyT<K>::term(r.vars(), qm, qc);
        q += qt;
        r -= qt * b;
    }
    return q;
}

/// Divide by the leading coefficient so the grlex-leading term is monic.
template <class K>
MPolyT<K> monic_normalize(const MPolyT<K>& f) {
    if (f.is_zero()) return f;
    return f.leading_term().second.inv() * f;
}

/// Sylvester resultant with respect to one variable, computed by
/// fraction-free (Bareiss) elimination over the remaining polynomial ring.
template <class K>
MPolyT<K> resultant(const MPolyT<K>& f, const MPolyT<K>& g, std::size_t var) {
    if (f.is_zero() || g.is_zero()) throw DegenerateInput("resultant: zero input");
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m <= 0 || n <= 0) throw DegenerateInput("resultant: inputs must have positive degree in the variable");
    UPoly<MPolyT<K>> fu = f.as_upoly_in(var), gu = g.as_upoly_in(var);
    const auto& vars = f.vars();
    std::size_t N = static_cast<std::size_t>(m + n);
    MPolyT<K> zero(vars);
    std::vector<std::vector<MPolyT<K>>> M(N, std::vector<MPolyT<K>>(N, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
                fu.coeff(static_cast<std::size_t>(m - j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            M[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
                gu.coeff(static_cast<std::size_t>(n - j));

    bool negate = false;
    MPolyT<K> prev;  // neutral 1 marker: empty means divide-by-one step
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < N && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == N) return zero;
            std::swap(M[k], M[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                MPolyT<K> num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = prev.is_zero() ? std::move(num) : exact_divide(num, prev);
            }
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    MPolyT<K> det = M[N - 1][N - 1];
    return negate ? -det : det;
}

/// Canonical text form: terms in descending graded-lex order, coefficients
/// in [0, p), '*' separated factors, '^' powers.
std::string to_text(const MPoly& f);

/// Move f into a different variable set; mapping[i] is the index of f's
/// i-th variable in the new set, or -1 if that variable must not occur.
template <class K>
MPolyT<K> rename_vars(const MPolyT<K>& f, std::shared_ptr<const VarSet> nv,
                      const std::vector<int>& mapping) {
    MPolyT<K> r(std::move(nv));
    for (const auto& [m, c] : f.terms()) {
        Mono mm(r.vars()->size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (mapping[i] < 0)
                throw std::invalid_argument("rename_vars: variable " + f.vars()->name(i) +
                                            " occurs but has no image");
            mm[static_cast<std::size_t>(mapping[i])] = m[i];
        }
        r.add_term(mm, c);
    }
    return r;
}

}  // namespace pcurve

#endif
