#pragma once

// Sparse multivariate polynomials with exact coefficients over a weighted
// graded variable context. Terms are kept in canonical order (higher weighted
// degree first, ties broken by lexicographically larger exponent vector), so
// equal polynomials have identical term maps and printing is deterministic.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "chow/context.hpp"
#include "chow/numeric.hpp"

namespace chow {

using Exps = std::vector<int>;

struct MonoKey {
    long deg;  // weighted degree, cached for ordering
    Exps exps;

    friend bool operator==(const MonoKey& a, const MonoKey& b) { return a.exps == b.exps; }
};

/// Canonical term order: larger weighted degree first, then lex-larger
/// exponent vector first. Compatible with monomial multiplication.
struct MonoBefore {
    bool operator()(const MonoKey& a, const MonoKey& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                            a.exps.begin(), a.exps.end());
    }
};

template <typename C>
class PolynomialT {
public:
    using Coeff = C;
    using TermMap = std::map<MonoKey, C, MonoBefore>;

    static constexpr long kMinusInfinity = std::numeric_limits<long>::min();

    explicit PolynomialT(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw Error("polynomial requires a context");
    }

    static PolynomialT zero(ContextPtr ctx) { return PolynomialT(std::move(ctx)); }

    static PolynomialT constant(ContextPtr ctx, C value) {
        PolynomialT p(std::move(ctx));
        if (!coeff_is_zero(value))
            p.terms_.emplace(MonoKey{0, Exps(p.ctx_->arity(), 0)}, std::move(value));
        return p;
    }

    static PolynomialT monomial(ContextPtr ctx, Exps exps, C coeff) {
        PolynomialT p(std::move(ctx));
        p.check_exps(exps);
        if (!coeff_is_zero(coeff))
            p.terms_.emplace(p.key(std::move(exps)), std::move(coeff));
        return p;
    }

    static PolynomialT variable(ContextPtr ctx, const std::string& name, int power = 1) {
        Exps e(ctx->arity(), 0);
        e[ctx->index_of(name)] = power;
        return monomial(std::move(ctx), std::move(e), C(1));
    }

    const ContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Weighted total degree; the zero polynomial reports -infinity.
    long weighted_degree() const {
        return terms_.empty() ? kMinusInfinity : terms_.begin()->first.deg;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = terms_.begin()->first.deg;
        return terms_.rbegin()->first.deg == d;
    }

    /// Degree in a single variable; -infinity for the zero polynomial.
    long degree_in(const std::string& name) const {
        if (terms_.empty()) return kMinusInfinity;
        int i = ctx_->index_of(name);
        long d = 0;
        for (const auto& [k, c] : terms_) d = std::max<long>(d, k.exps[i]);
        return d;
    }

    C coefficient(const Exps& exps) const {
        check_exps(exps);
        auto it = terms_.find(key_view(exps));
        return it == terms_.end() ? C(0) : it->second;
    }

    /// The coefficient of name^k, as a polynomial in the remaining variables
    /// (same context, exponent of `name` zeroed). Absent powers yield 0.
    PolynomialT coefficient_of(const std::string& name, int k) const {
        int i = ctx_->index_of(name);
        PolynomialT r(ctx_);
        for (const auto& [key, c] : terms_) {
            if (key.exps[i] != k) continue;
            Exps e = key.exps;
            e[i] = 0;
            r.add_term(std::move(e), c);
        }
        return r;
    }

    const std::pair<const MonoKey, C>& leading_term() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return *terms_.begin();
    }

    PolynomialT& operator+=(const PolynomialT& o) {
        require_same_context(o);
        for (const auto& [k, c] : o.terms_) add_term_key(k, c);
        return *this;
    }

    PolynomialT& operator-=(const PolynomialT& o) {
        require_same_context(o);
        for (const auto& [k, c] : o.terms_) add_term_key(k, C(0) - c);
        return *this;
    }

    friend PolynomialT operator+(PolynomialT a, const PolynomialT& b) { return a += b; }

    friend PolynomialT operator-(PolynomialT a, const PolynomialT& b) { return a -= b; }

    PolynomialT operator-() const {
        PolynomialT r(ctx_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, C(0) - c);
        return r;
    }

    friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
        a.require_same_context(b);
        if constexpr (std::is_same_v<C, Int>) {
            if (auto r = mul_packed(a, b)) return *std::move(r);
        }
        PolynomialT r(a.ctx_);
        const int arity = a.ctx_->arity();
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                Exps e(arity);
                for (int i = 0; i < arity; ++i) e[i] = ka.exps[i] + kb.exps[i];
                r.add_term_key(MonoKey{ka.deg + kb.deg, std::move(e)}, ca * cb);
            }
        }
        return r;
    }

    friend PolynomialT operator*(const C& s, const PolynomialT& p) {
        PolynomialT r(p.ctx_);
        if (coeff_is_zero(s)) return r;
        for (const auto& [k, c] : p.terms_) {
            C v = s * c;
            if (!coeff_is_zero(v)) r.terms_.emplace(k, std::move(v));
        }
        return r;
    }
    friend PolynomialT operator*(const PolynomialT& p, const C& s) { return s * p; }

    PolynomialT& operator*=(const PolynomialT& o) { return *this = *this * o; }

    PolynomialT pow(int e) const {
        if (e < 0) throw Error("negative power");
        PolynomialT r = constant(ctx_, C(1));
        for (int i = 0; i < e; ++i) r *= *this;
        return r;
    }

    friend bool operator==(const PolynomialT& a, const PolynomialT& b) {
        if (!same_context(a.ctx_, b.ctx_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first)) return false;
            if (!(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const PolynomialT& a, const PolynomialT& b) { return !(a == b); }

    /// Canonical text form, e.g. `21*h^2 - 42*h*c1 + 18*c1^2 + 9*c2`.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            std::string cs = coeff_str(c);
            bool neg = coeff_is_negative(c);
            if (neg) cs = cs.substr(1);
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mono = monomial_str(k.exps);
            if (mono.empty()) {
                os << cs;
            } else if (cs == "1") {
                os << mono;
            } else {
                os << cs << "*" << mono;
            }
        }
        return os.str();
    }

    void add_term(Exps exps, const C& c) {
        check_exps(exps);
        add_term_key(key(std::move(exps)), c);
    }

    /// Total order on polynomials (used for canonical factor maps); compares
    /// contexts, then term sequences.
    friend std::strong_ordering ordering(const PolynomialT& a, const PolynomialT& b) {
        // compare contexts structurally
        if (!same_context(a.ctx_, b.ctx_)) {
            auto sa = a.ctx_->to_string(), sb = b.ctx_->to_string();
            return sa < sb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        MonoBefore before;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first))
                return before(ia->first, ib->first) ? std::strong_ordering::greater
                                                    : std::strong_ordering::less;
            if (!(ia->second == ib->second))
                return coeff_before(ia->second, ib->second) ? std::strong_ordering::less
                                                            : std::strong_ordering::greater;
        }
        if (ia == a.terms_.end() && ib == b.terms_.end()) return std::strong_ordering::equal;
        return ia == a.terms_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    ContextPtr ctx_;
    TermMap terms_;

    MonoKey key(Exps exps) const {
        long d = 0;
        for (int i = 0; i < ctx_->arity(); ++i) d += static_cast<long>(exps[i]) * ctx_->weight(i);
        return MonoKey{d, std::move(exps)};
    }
    MonoKey key_view(const Exps& exps) const { return key(exps); }

    void check_exps(const Exps& exps) const {
        if (static_cast<int>(exps.size()) != ctx_->arity())
            throw Error("exponent vector arity mismatch");
        for (int e : exps)
            if (e < 0) throw Error("negative exponent");
    }

    void add_term_key(MonoKey k, const C& c) {
        if (coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    void require_same_context(const PolynomialT& o) const {
        if (!same_context(ctx_, o.ctx_))
            throw ContextMismatch("context mismatch: " + ctx_->to_string() + " vs " +
                                  o.ctx_->to_string());
    }

    /// Product kernel on 8-bit-packed exponent words; applicable when the
    /// context has at most 8 variables and no per-variable exponent of the
    /// product can exceed 255. The dominant cost of the library lives here.
    static std::optional<PolynomialT> mul_packed(const PolynomialT& a, const PolynomialT& b) {
        const int arity = a.ctx_->arity();
        if (arity > 8 || a.terms_.empty() || b.terms_.empty()) return std::nullopt;
        for (int i = 0; i < arity; ++i) {
            long ma = 0, mb = 0;
            for (const auto& [k, c] : a.terms_) ma = std::max<long>(ma, k.exps[i]);
            for (const auto& [k, c] : b.terms_) mb = std::max<long>(mb, k.exps[i]);
            if (ma + mb > 255) return std::nullopt;
        }
        auto pack = [arity](const Exps& e) {
            std::uint64_t w = 0;
            for (int i = 0; i < arity; ++i) w = (w << 8) | static_cast<std::uint64_t>(e[i]);
            return w;
        };
        std::vector<std::pair<std::uint64_t, const C*>> pa, pb;
        pa.reserve(a.terms_.size());
        pb.reserve(b.terms_.size());
        for (const auto& [k, c] : a.terms_) pa.emplace_back(pack(k.exps), &c);
        for (const auto& [k, c] : b.terms_) pb.emplace_back(pack(k.exps), &c);

        std::unordered_map<std::uint64_t, C> acc;
        acc.reserve(pa.size() * 2);
        for (const auto& [wa, ca] : pa)
            for (const auto& [wb, cb] : pb) acc[wa + wb] += (*ca) * (*cb);

        PolynomialT r(a.ctx_);
        std::vector<std::pair<MonoKey, C>> terms;
        terms.reserve(acc.size());
        for (auto& [w, c] : acc) {
            if (coeff_is_zero(c)) continue;
            Exps e(arity);
            long deg = 0;
            std::uint64_t v = w;
            for (int i = arity - 1; i >= 0; --i) {
                e[i] = static_cast<int>(v & 0xff);
                deg += static_cast<long>(e[i]) * a.ctx_->weight(i);
                v >>= 8;
            }
            terms.emplace_back(MonoKey{deg, std::move(e)}, std::move(c));
        }
        std::sort(terms.begin(), terms.end(),
                  [](const auto& x, const auto& y) { return MonoBefore{}(x.first, y.first); });
        r.terms_ = TermMap(std::make_move_iterator(terms.begin()),
                           std::make_move_iterator(terms.end()));
        return r;
    }

    std::string monomial_str(const Exps& exps) const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < ctx_->arity(); ++i) {
            if (exps[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << ctx_->name(i);
            if (exps[i] > 1) os << "^" << exps[i];
        }
        return os.str();
    }

    static bool coeff_before(const Int& a, const Int& b) { return a < b; }
    static bool coeff_before(const Rat& a, const Rat& b) { return a < b; }
    static bool coeff_before(const Mod& a, const Mod& b) { return a.value() < b.value(); }
};

using Polynomial = PolynomialT<Int>;
using QPolynomial = PolynomialT<Rat>;
using ModPolynomial = PolynomialT<Mod>;

// ---------------------------------------------------------------------------
// Division, substitution, evaluation
// ---------------------------------------------------------------------------

template <typename C>
struct DivModResult {
    PolynomialT<C> quotient;
    PolynomialT<C> remainder;
};

/// Division with remainder by a relation monic in `var`: the unique
/// representative with degree in `var` below deg_var(rel), together with the
/// quotient (p == quotient*rel + remainder, exactly).
template <typename C>
DivModResult<C> divmod_monic(const PolynomialT<C>& p, const PolynomialT<C>& rel,
                             const std::string& var) {
    const auto& ctx = p.context();
    if (!same_context(ctx, rel.context()))
        throw ContextMismatch("divmod_monic: context mismatch");
    long m = rel.degree_in(var);
    if (m == PolynomialT<C>::kMinusInfinity)
        throw NotMonic("divmod_monic: relation is zero");
    auto lead = rel.coefficient_of(var, static_cast<int>(m));
    if (lead != PolynomialT<C>::constant(ctx, C(1)))
        throw NotMonic("divmod_monic: relation not monic in '" + var + "'");

    PolynomialT<C> r = p;
    PolynomialT<C> q = PolynomialT<C>::zero(ctx);
    const auto xvar = PolynomialT<C>::variable(ctx, var);
    long dr = r.degree_in(var);
    while (!r.is_zero() && dr >= m) {
        auto top = r.coefficient_of(var, static_cast<int>(dr));  // no var left in top
        auto shift = top * xvar.pow(static_cast<int>(dr - m));
        q += shift;
        r -= shift * rel;
        dr = r.degree_in(var);
    }
    return {std::move(q), std::move(r)};
}

template <typename C>
PolynomialT<C> reduce_mod_monic(const PolynomialT<C>& p, const PolynomialT<C>& rel,
                                const std::string& var) {
    return divmod_monic(p, rel, var).remainder;
}

/// Rebuild `p` in `target` context, mapping variables by name (optionally
/// through `renames`). Every variable actually used by `p` must map to a
/// variable of `target`.
template <typename C>
PolynomialT<C> transfer(const PolynomialT<C>& p, const ContextPtr& target,
                        const std::map<std::string, std::string>& renames = {}) {
    const auto& ctx = p.context();
    std::vector<int> slot(ctx->arity(), -1);
    for (int i = 0; i < ctx->arity(); ++i) {
        auto it = renames.find(ctx->name(i));
        const std::string& nm = it == renames.end() ? ctx->name(i) : it->second;
        if (target->has(nm)) slot[i] = target->index_of(nm);
    }
    PolynomialT<C> r(target);
    for (const auto& [k, c] : p.terms()) {
        Exps e(target->arity(), 0);
        for (int i = 0; i < ctx->arity(); ++i) {
            if (k.exps[i] == 0) continue;
            if (slot[i] < 0)
                throw UnknownVariable("transfer: variable '" + ctx->name(i) +
                                      "' not present in target context");
            e[slot[i]] += k.exps[i];
        }
        r.add_term(std::move(e), c);
    }
    return r;
}

/// Substitute polynomials for variables. Images must all live in `target`
/// (defaults to the context of the first binding); variables without a
/// binding pass through by name and must exist in the target context.
template <typename C>
PolynomialT<C> substitute(const PolynomialT<C>& p,
                          const std::map<std::string, PolynomialT<C>>& bindings,
                          ContextPtr target = nullptr) {
    const auto& ctx = p.context();
    for (const auto& [name, img] : bindings) {
        if (!ctx->has(name)) throw UnknownVariable("substitute: unknown variable '" + name + "'");
        if (!target) target = img.context();
        if (!same_context(target, img.context()))
            throw ContextMismatch("substitute: images live in different contexts");
    }
    if (!target) target = ctx;

    // image of each source variable (bound image, or the same-named variable)
    std::vector<const PolynomialT<C>*> image(ctx->arity(), nullptr);
    std::vector<PolynomialT<C>> passthrough;
    passthrough.reserve(ctx->arity());
    for (int i = 0; i < ctx->arity(); ++i) {
        auto it = bindings.find(ctx->name(i));
        if (it != bindings.end()) {
            image[i] = &it->second;
        } else {
            passthrough.push_back(PolynomialT<C>::variable(target, ctx->name(i)));
            image[i] = nullptr;  // fixed up below; vector may reallocate
        }
    }
    {
        std::size_t next = 0;
        for (int i = 0; i < ctx->arity(); ++i)
            if (!image[i]) image[i] = &passthrough[next++];
    }

    // powers cache per variable
    std::vector<std::vector<PolynomialT<C>>> powers(ctx->arity());
    auto power_of = [&](int i, int e) -> const PolynomialT<C>& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(PolynomialT<C>::constant(target, C(1)));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * (*image[i]));
        return cache[e];
    };

    PolynomialT<C> r = PolynomialT<C>::zero(target);
    for (const auto& [k, c] : p.terms()) {
        PolynomialT<C> t = PolynomialT<C>::constant(target, c);
        for (int i = 0; i < ctx->arity(); ++i)
            if (k.exps[i] != 0) t *= power_of(i, k.exps[i]);
        r += t;
    }
    return r;
}

/// Exact evaluation; every variable of the context must be bound.
template <typename C>
C eval(const PolynomialT<C>& p, const std::map<std::string, C>& point) {
    const auto& ctx = p.context();
    std::vector<const C*> v(ctx->arity(), nullptr);
    for (int i = 0; i < ctx->arity(); ++i) {
        auto it = point.find(ctx->name(i));
        if (it == point.end())
            throw UnknownVariable("eval: unbound variable '" + ctx->name(i) + "'");
        v[i] = &it->second;
    }
    C total(0);
    for (const auto& [k, c] : p.terms()) {
        C t = c;
        for (int i = 0; i < ctx->arity(); ++i)
            for (int e = 0; e < k.exps[i]; ++e) t *= *v[i];
        total += t;
    }
    return total;
}

inline Int eval_integers(const Polynomial& p, const std::map<std::string, Int>& point) {
    return eval(p, point);
}

template <typename From, typename To, typename Fn>
PolynomialT<To> map_coefficients(const PolynomialT<From>& p, Fn&& fn) {
    PolynomialT<To> r(p.context());
    for (const auto& [k, c] : p.terms()) r.add_term(k.exps, fn(c));
    return r;
}

inline QPolynomial to_rational(const Polynomial& p) {
    return map_coefficients<Int, Rat>(p, [](const Int& c) { return Rat(c); });
}

inline ModPolynomial to_mod(const Polynomial& p, const Int& modulus) {
    return map_coefficients<Int, Mod>(p, [&](const Int& c) { return Mod(c, modulus); });
}

/// Integer polynomial from a rational one; throws if any denominator is not 1.
inline Polynomial to_integer(const QPolynomial& p) {
    return map_coefficients<Rat, Int>(p, [](const Rat& c) {
        if (boost::multiprecision::denominator(c) != 1)
            throw ExactnessError(ExactnessError::Stage::integer_division,
                                 "rational coefficient " + coeff_str(c) + " is not an integer");
        return Int(boost::multiprecision::numerator(c));
    });
}

// ---------------------------------------------------------------------------
// Integer-polynomial specifics
// ---------------------------------------------------------------------------

/// gcd of all coefficients (0 for the zero polynomial).
inline Int content(const Polynomial& p) {
    Int g = 0;
    for (const auto& [k, c] : p.terms()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

/// Divide all coefficients by d; throws ExactnessError if any is not divisible.
inline Polynomial divide_coefficients_exact(const Polynomial& p, const Int& d) {
    if (d == 0) throw Error("division by zero");
    Polynomial r(p.context());
    for (const auto& [k, c] : p.terms()) {
        if (c % d != 0)
            throw ExactnessError(ExactnessError::Stage::integer_division,
                                 "coefficient " + c.str() + " not divisible by " + d.str());
        r.add_term(k.exps, c / d);
    }
    return r;
}

/// Exact multivariate division over Z: returns num/den when den divides num,
/// std::nullopt otherwise. Leading-term elimination in the canonical monomial
/// order; valid because the order is multiplicative.
inline std::optional<Polynomial> try_exact_divide(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error("division by zero polynomial");
    if (!same_context(num.context(), den.context()))
        throw ContextMismatch("try_exact_divide: context mismatch");
    const auto& ctx = num.context();
    const int arity = ctx->arity();
    Polynomial r = num;
    Polynomial q = Polynomial::zero(ctx);
    const auto& dl = den.leading_term();
    while (!r.is_zero()) {
        const auto& rl = r.leading_term();
        Exps e(arity);
        for (int i = 0; i < arity; ++i) {
            e[i] = rl.first.exps[i] - dl.first.exps[i];
            if (e[i] < 0) return std::nullopt;
        }
        if (rl.second % dl.second != 0) return std::nullopt;
        Polynomial t = Polynomial::monomial(ctx, std::move(e), rl.second / dl.second);
        q += t;
        r -= t * den;
    }
    return q;
}

inline Polynomial exact_divide(const Polynomial& num, const Polynomial& den,
                               const std::string& what) {
    auto q = try_exact_divide(num, den);
    if (!q)
        throw ExactnessError(ExactnessError::Stage::denominator,
                             what + ": denominator does not divide numerator exactly");
    return *std::move(q);
}

/// Linear form: sum of coeff * variable over the given name/coefficient map.
inline Polynomial linear_form(const ContextPtr& ctx, const std::map<std::string, Int>& coeffs) {
    Polynomial r = Polynomial::zero(ctx);
    for (const auto& [name, c] : coeffs)
        if (c != 0) r += c * Polynomial::variable(ctx, name);
    return r;
}

} // namespace chow
