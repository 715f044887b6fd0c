#include "chow/localization.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chow/symmetric.hpp"

namespace chow {

// ---------------------------------------------------------------------------
// RationalClass
// ---------------------------------------------------------------------------

RationalClass::RationalClass(Polynomial num, Int scale, FactorMap factors)
    : num_(std::move(num)), scale_(std::move(scale)) {
    if (scale_ == 0) throw Error("rational class: zero denominator scale");
    for (auto& [f, mult] : factors) {
        if (f.is_zero()) throw Error("rational class: zero denominator factor");
        if (mult <= 0) throw Error("rational class: nonpositive factor multiplicity");
        Int g = content(f);
        Polynomial prim = divide_coefficients_exact(f, g);
        if (coeff_is_negative(prim.leading_term().second)) {
            prim = -prim;
            g = -g;
        }
        for (int i = 0; i < mult; ++i) scale_ *= g;
        factors_[std::move(prim)] += mult;
    }
    if (scale_ < 0) {
        scale_ = -scale_;
        num_ = -num_;
    }
}

Polynomial RationalClass::denominator() const {
    Polynomial d = Polynomial::constant(num_.context(), scale_);
    for (const auto& [f, mult] : factors_) d *= f.pow(mult);
    return d;
}

RationalClass& RationalClass::operator+=(const RationalClass& o) {
    if (scale_ == o.scale_ && factors_.size() == o.factors_.size() &&
        std::equal(factors_.begin(), factors_.end(), o.factors_.begin(),
                   [](const auto& x, const auto& y) {
                       return x.second == y.second && x.first == y.first;
                   })) {
        num_ += o.num_;
        return *this;
    }
    Int s = chow::lcm(scale_, o.scale_);
    Polynomial cof_a = Polynomial::constant(num_.context(), s / scale_);
    Polynomial cof_b = Polynomial::constant(o.num_.context(), s / o.scale_);
    FactorMap joined = factors_;
    for (const auto& [f, mult] : o.factors_) {
        auto it = joined.find(f);
        if (it == joined.end())
            joined[f] = mult;
        else
            it->second = std::max(it->second, mult);
    }
    for (const auto& [f, mult] : joined) {
        auto ia = factors_.find(f);
        int ma = ia == factors_.end() ? 0 : ia->second;
        auto ib = o.factors_.find(f);
        int mb = ib == o.factors_.end() ? 0 : ib->second;
        if (mult > ma) cof_a *= f.pow(mult - ma);
        if (mult > mb) cof_b *= f.pow(mult - mb);
    }
    num_ = num_ * cof_a + o.num_ * cof_b;
    scale_ = std::move(s);
    factors_ = std::move(joined);
    return *this;
}

std::optional<Polynomial> RationalClass::try_to_polynomial() const {
    Polynomial q = num_;
    for (const auto& [f, mult] : factors_) {
        for (int i = 0; i < mult; ++i) {
            auto next = try_exact_divide(q, f);
            if (!next) return std::nullopt;
            q = *std::move(next);
        }
    }
    if (scale_ != 1) {
        for (const auto& [k, c] : q.terms())
            if (c % scale_ != 0) return std::nullopt;
        q = divide_coefficients_exact(q, scale_);
    }
    return q;
}

Polynomial RationalClass::to_polynomial(const std::string& what) const {
    auto q = try_to_polynomial();
    if (!q)
        throw ExactnessError(ExactnessError::Stage::denominator,
                             what + ": denominator does not divide the combined numerator");
    return *std::move(q);
}

ExpVec ProductFixedPoint::total() const {
    if (components.empty()) throw Error("empty fixed point");
    ExpVec t(components.front().size(), 0);
    for (const auto& v : components)
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += v[i];
    return t;
}

// ---------------------------------------------------------------------------
// Engine internals
// ---------------------------------------------------------------------------

std::pair<Int, FactorMap> tangent_chern_factors(const ExpVec& v0, int n, int k,
                                                const ContextPtr& ctx) {
    Int scale = 1;
    FactorMap factors;
    for (const auto& v : vectors_of_weight(k, n)) {
        if (v == v0) continue;
        std::map<std::string, Int> coeffs;
        for (int i = 0; i < n; ++i)
            if (v[i] != v0[i]) coeffs["l" + std::to_string(i + 1)] = v[i] - v0[i];
        Polynomial form = linear_form(ctx, coeffs);
        Int g = content(form);
        Polynomial prim = divide_coefficients_exact(form, g);
        if (coeff_is_negative(prim.leading_term().second)) {
            prim = -prim;
            g = -g;
        }
        scale *= g;
        ++factors[std::move(prim)];
    }
    return {std::move(scale), std::move(factors)};
}

namespace {

Polynomial neg_weight_form(const ExpVec& v, int n, const ContextPtr& ctx) {
    std::map<std::string, Int> coeffs;
    for (int i = 0; i < n; ++i)
        if (v[i] != 0) coeffs["l" + std::to_string(i + 1)] = -v[i];
    return linear_form(ctx, coeffs);
}

/// Balanced tree reduction; keeps intermediate numerators small. Because the
/// rational-class sum is exactly associative and commutative, every grouping
/// (serial tree, per-thread blocks, any schedule) produces the identical
/// canonical representation.
std::optional<RationalClass> tree_fold(std::size_t lo, std::size_t hi,
                                       const std::function<RationalClass(std::size_t)>& gen) {
    if (lo >= hi) return std::nullopt;
    if (hi - lo == 1) return gen(lo);
    std::size_t mid = lo + (hi - lo) / 2;
    auto left = tree_fold(lo, mid, gen);
    auto right = tree_fold(mid, hi, gen);
    if (!left) return right;
    if (!right) return left;
    *left += *right;
    return left;
}

std::optional<RationalClass> fold_sum(std::size_t count,
                                      const std::function<RationalClass(std::size_t)>& gen,
                                      Exec exec) {
    if (count == 0) return std::nullopt;
#ifdef _OPENMP
    if (exec == Exec::parallel && count > 1) {
        std::size_t nblocks = std::min<std::size_t>(
            count, 4 * static_cast<std::size_t>(omp_get_max_threads()));
        std::vector<std::optional<RationalClass>> parts(nblocks);
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long b = 0; b < static_cast<long>(nblocks); ++b) {
            try {
                std::size_t lo = count * b / nblocks;
                std::size_t hi = count * (b + 1) / nblocks;
                parts[b] = tree_fold(lo, hi, gen);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        // pairwise level merge, concurrent within each level
        while (parts.size() > 1) {
            std::size_t half = parts.size() / 2;
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < static_cast<long>(half); ++i) {
                try {
                    auto& a = parts[2 * i];
                    auto& b = parts[2 * i + 1];
                    if (a && b)
                        *a += *b;
                    else if (!a)
                        a = std::move(b);
                } catch (...) {
#pragma omp critical
                    if (!err) err = std::current_exception();
                }
            }
            if (err) std::rethrow_exception(err);
            std::vector<std::optional<RationalClass>> next;
            next.reserve(half + 1);
            for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
                next.push_back(std::move(parts[i]));
            if (parts.size() % 2) next.push_back(std::move(parts.back()));
            parts = std::move(next);
        }
        return parts.empty() ? std::nullopt : std::move(parts.front());
    }
#else
    (void)exec;
#endif
    return tree_fold(0, count, gen);
}

struct TupleSpace {
    std::vector<std::vector<ExpVec>> pools;  // one pool of fixed points per factor
    std::size_t count() const {
        std::size_t c = 1;
        for (const auto& p : pools) c *= p.size();
        return c;
    }
    ProductFixedPoint decode(std::size_t index) const {
        ProductFixedPoint pt;
        pt.components.resize(pools.size());
        for (std::size_t j = pools.size(); j-- > 0;) {
            pt.components[j] = pools[j][index % pools[j].size()];
            index /= pools[j].size();
        }
        return pt;
    }
};

/// Shared core of delta_class and pushforward_product_map: the raw
/// localization sum of numerator_extra(pt) * [Q_{sum v_j}] / prod_j c_top(v_j).
Polynomial raw_pushforward(int n, int d, const Partition& mu,
                           const std::function<Polynomial(const ContextPtr&,
                                                          const ProductFixedPoint&)>& extra,
                           Exec exec, const std::string& what) {
    auto ctx = l_context(n, {"h"});
    for (const auto& [k, count] : mu.frequencies()) {
        (void)count;
        ensure_restriction_consistency(n, k);
    }

    // fixed-point classes of the target space, one per total vector
    Polynomial relation = total_relation(n, d, "h", ctx);
    std::map<ExpVec, Polynomial> numerators;
    for (const auto& w : vectors_of_weight(d, n))
        numerators.emplace(w, exact_divide(relation, point_weight_form(w, n, "h", ctx),
                                           "fixed point class"));

    // factored tangent Chern classes per factor degree
    std::map<int, std::map<ExpVec, std::pair<Int, FactorMap>>> tangents;
    for (const auto& [k, count] : mu.frequencies()) {
        (void)count;
        auto& pool = tangents[k];
        for (const auto& v : vectors_of_weight(k, n))
            pool.emplace(v, tangent_chern_factors(v, n, k, ctx));
    }

    TupleSpace space;
    for (int k : mu.parts()) space.pools.push_back(vectors_of_weight(k, n));

    auto summand = [&](std::size_t index) {
        ProductFixedPoint pt = space.decode(index);
        Polynomial num = numerators.at(pt.total());
        Polynomial e = extra(ctx, pt);
        if (!(e == Polynomial::constant(ctx, 1))) num *= e;
        Int scale = 1;
        FactorMap factors;
        for (std::size_t j = 0; j < pt.components.size(); ++j) {
            const auto& [s, fs] = tangents.at(mu.parts()[j]).at(pt.components[j]);
            scale *= s;
            for (const auto& [f, mult] : fs) factors[f] += mult;
        }
        return RationalClass(std::move(num), std::move(scale), std::move(factors));
    };

    auto total = fold_sum(space.count(), summand, exec);
    if (!total) throw Error(what + ": empty fixed-point sum");
    Polynomial sum = total->to_polynomial(what);

    if (!is_symmetric(sum, n))
        throw ExactnessError(ExactnessError::Stage::symmetry,
                             what + ": localization sum is not symmetric in the torus roots");
    return sum;
}

} // namespace

void ensure_restriction_consistency(int n, int k) {
    static std::mutex mu;
    static std::set<std::pair<int, int>> done;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (done.count({n, k})) return;
    }
    auto ctx = l_context(n, {"h"});
    for (const auto& v : vectors_of_weight(k, n)) {
        Polynomial fp = fixed_point_class(v, n, k, "h", ctx);
        ProductFixedPoint pt{{v}};
        Polynomial restricted = restrict_to_fixed_point(fp, pt, n);
        Polynomial expected = tangent_top_chern(v, n, k, l_context(n));
        if (restricted != expected)
            throw Error("fixed-point restriction sign convention is inconsistent at n=" +
                        std::to_string(n) + ", k=" + std::to_string(k));
    }
    std::lock_guard<std::mutex> lock(mu);
    done.insert({n, k});
}

Polynomial delta_class(int n, int d, const Partition& mu, Exec exec) {
    if (mu.d() != d) throw Error("delta_class: partition does not sum to d");
    if (mu.size() > n) {
        std::cerr << "warning: delta_class: partition " << mu.str() << " has more than n="
                  << n << " parts; the supported fixed-support set is empty, returning 0\n";
        return Polynomial::zero(c_context(n, {"h"}));
    }
    const std::string what = "delta_class(" + std::to_string(n) + "," + std::to_string(d) +
                             "," + mu.str() + ")";
    auto one = [](const ContextPtr& ctx, const ProductFixedPoint&) {
        return Polynomial::constant(ctx, 1);
    };
    Polynomial sum = raw_pushforward(n, d, mu, one, exec, what);

    Int deg = product_map_degree(mu);
    Polynomial divided(sum.context());
    try {
        divided = divide_coefficients_exact(sum, deg);
    } catch (const ExactnessError&) {
        throw ExactnessError(ExactnessError::Stage::integer_division,
                             what + ": pushforward is not divisible by deg(pi_mu) = " +
                                 deg.str());
    }
    Polynomial out = to_chern_basis(divided, n);
    if (!out.is_homogeneous())
        throw ExactnessError(ExactnessError::Stage::symmetry, what + ": result not homogeneous");
    return out;
}

Polynomial pushforward_product_map(int n, int d, const Partition& mu, const std::vector<int>& e,
                                   Exec exec, bool chern) {
    if (mu.d() != d) throw Error("pushforward_product_map: partition does not sum to d");
    if (static_cast<int>(e.size()) != mu.size())
        throw Error("pushforward_product_map: exponent tuple length must equal the part count");
    for (int ej : e)
        if (ej < 0) throw Error("pushforward_product_map: exponents must be >= 0");
    if (mu.size() > n) {
        std::cerr << "warning: pushforward_product_map: partition " << mu.str()
                  << " has more than n=" << n << " parts; returning 0\n";
        return Polynomial::zero(chern ? c_context(n, {"h"}) : l_context(n, {"h"}));
    }
    const std::string what = "pushforward_product_map(" + std::to_string(n) + "," +
                             std::to_string(d) + "," + mu.str() + ")";
    auto extra = [&](const ContextPtr& ctx, const ProductFixedPoint& pt) {
        Polynomial m = Polynomial::constant(ctx, 1);
        for (std::size_t j = 0; j < pt.components.size(); ++j)
            if (e[j] > 0) m *= neg_weight_form(pt.components[j], n, ctx).pow(e[j]);
        return m;
    };
    Polynomial sum = raw_pushforward(n, d, mu, extra, exec, what);
    return chern ? to_chern_basis(sum, n) : sum;
}

Polynomial restrict_to_fixed_point(const Polynomial& p, const ProductFixedPoint& pt, int n) {
    auto target = l_context(n);
    const auto& ctx = p.context();
    std::map<std::string, Polynomial> bindings;
    for (std::size_t j = 0; j < pt.components.size(); ++j) {
        std::string xi = "xi" + std::to_string(j + 1);
        if (ctx->has(xi)) bindings.emplace(xi, neg_weight_form(pt.components[j], n, target));
    }
    if (ctx->has("h")) bindings.emplace("h", neg_weight_form(pt.total(), n, target));
    return substitute(p, bindings, target);
}

UnitCheckResult localization_unit_check(int n, int k) {
    auto ctx = l_context(n, {"h"});
    std::optional<RationalClass> total;
    for (const auto& v : vectors_of_weight(k, n)) {
        auto [scale, factors] = tangent_chern_factors(v, n, k, ctx);
        RationalClass term(fixed_point_class(v, n, k, "h", ctx), std::move(scale),
                           std::move(factors));
        if (total)
            *total += term;
        else
            total = std::move(term);
    }
    Polynomial residual = total->numerator() - total->denominator();
    return {residual.is_zero(), std::move(residual)};
}

} // namespace chow
