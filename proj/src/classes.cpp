#include "chow/classes.hpp"

#include "chow/symmetric.hpp"

namespace chow {

Polynomial point_weight_form(const ExpVec& v, int n, const std::string& var,
                             const ContextPtr& ctx) {
    std::map<std::string, Int> coeffs;
    coeffs[var] = 1;
    for (int i = 0; i < n; ++i)
        if (v[i] != 0) coeffs["l" + std::to_string(i + 1)] = v[i];
    return linear_form(ctx, coeffs);
}

Polynomial partition_class(int n, const Partition& mu, const std::string& var,
                           const ContextPtr& ctx) {
    Polynomial p = Polynomial::constant(ctx, 1);
    for (const auto& v : vectors_with_support(mu, n)) p *= point_weight_form(v, n, var, ctx);
    return p;
}

Polynomial total_relation(int n, int d, const std::string& var, const ContextPtr& ctx) {
    Polynomial p = Polynomial::constant(ctx, 1);
    for (const auto& v : vectors_of_weight(d, n)) p *= point_weight_form(v, n, var, ctx);
    return p;
}

namespace {

/// prod_i (x + (d-1)y + l_i) minus the correction (-(d-1))^n prod_i (-y + l_i),
/// in the l-basis over ctx [x, y, l1..ln].
Polynomial alpha_generating_poly_l(int n, int d, const ContextPtr& ctx) {
    const auto x = Polynomial::variable(ctx, "x");
    const auto y = Polynomial::variable(ctx, "y");
    Polynomial main = Polynomial::constant(ctx, 1);
    Polynomial corr = Polynomial::constant(ctx, 1);
    for (int i = 1; i <= n; ++i) {
        const auto li = Polynomial::variable(ctx, "l" + std::to_string(i));
        main *= x + Int(d - 1) * y + li;
        corr *= li - y;
    }
    Int scale = 1;
    for (int i = 0; i < n; ++i) scale *= -(d - 1);
    return main - scale * corr;
}

} // namespace

Polynomial alpha_generating_poly(int n, int d, bool chern) {
    if (d < 2) throw Error("alpha_generating_poly requires d >= 2");
    auto ctx = l_context(n, {"x", "y"});
    Polynomial q = alpha_generating_poly_l(n, d, ctx);
    if (q.degree_in("y") >= n)
        throw Error("alpha_generating_poly: y-degree bound violated");  // cancellation is forced
    return chern ? to_chern_basis(q, n) : q;
}

std::vector<Polynomial> alpha_generators(int n, int d, const std::string& var) {
    Polynomial q = alpha_generating_poly(n, d);
    auto target = c_context(n, {var});
    std::vector<Polynomial> alphas;
    alphas.reserve(n);
    for (int i = 1; i <= n; ++i) {
        Polynomial ai = q.coefficient_of("y", n - i);
        ai = transfer(ai, target, {{"x", var}});
        if (!ai.is_homogeneous() || ai.weighted_degree() != i)
            throw Error("alpha_" + std::to_string(i) + " is not homogeneous of degree " +
                        std::to_string(i));
        alphas.push_back(std::move(ai));
    }
    return alphas;
}

Polynomial incidence_class(int n, int d) {
    if (d < 2) throw Error("incidence_class requires d >= 2");
    auto ctx = l_context(n, {"x", "y"});
    const auto x = Polynomial::variable(ctx, "x");
    const auto y = Polynomial::variable(ctx, "y");
    Polynomial p = Polynomial::constant(ctx, 1);
    for (int i = 1; i <= n; ++i)
        p *= x + Int(d - 1) * y + Polynomial::variable(ctx, "l" + std::to_string(i));
    return p;
}

Polynomial invariant_hypersurface_class(const ContextPtr& ctx,
                                        const std::vector<std::pair<std::string, int>>& degrees,
                                        const std::vector<Int>& character, int n) {
    if (static_cast<int>(character.size()) != n && !character.empty())
        throw Error("character must have length n (or be empty for the trivial character)");
    std::map<std::string, Int> coeffs;
    for (const auto& [var, deg] : degrees) coeffs[var] += deg;
    for (int i = 0; i < static_cast<int>(character.size()); ++i)
        coeffs["l" + std::to_string(i + 1)] += character[i];
    return linear_form(ctx, coeffs);
}

Polynomial fixed_point_class(const ExpVec& v, int n, int d, const std::string& var,
                             const ContextPtr& ctx) {
    int total = 0;
    for (int e : v) total += e;
    if (static_cast<int>(v.size()) != n || total != d)
        throw Error("fixed_point_class: vector is not in N^" + std::to_string(n) + "(" +
                    std::to_string(d) + ")");
    Polynomial p = Polynomial::constant(ctx, 1);
    for (const auto& w : vectors_of_weight(d, n)) {
        if (w == v) continue;
        p *= point_weight_form(w, n, var, ctx);
    }
    return p;
}

Polynomial tangent_top_chern(const ExpVec& v0, int n, int k, const ContextPtr& ctx) {
    int total = 0;
    for (int e : v0) total += e;
    if (static_cast<int>(v0.size()) != n || total != k)
        throw Error("tangent_top_chern: vector is not in N^" + std::to_string(n) + "(" +
                    std::to_string(k) + ")");
    Polynomial p = Polynomial::constant(ctx, 1);
    for (const auto& v : vectors_of_weight(k, n)) {
        if (v == v0) continue;
        std::map<std::string, Int> coeffs;
        for (int i = 0; i < n; ++i)
            if (v[i] != v0[i]) coeffs["l" + std::to_string(i + 1)] = v[i] - v0[i];
        p *= linear_form(ctx, coeffs);
    }
    return p;
}

AmbientFactor AmbientFactor::forms(int n, int k, const std::string& var, const ContextPtr& ctx) {
    return AmbientFactor{var, total_relation(n, k, var, ctx)};
}

AmbientFactor AmbientFactor::points(int n, const std::string& var, const ContextPtr& ctx) {
    // monic normalization of P_{1}(-var): roots at +l_i
    Polynomial p = Polynomial::constant(ctx, 1);
    for (int i = 1; i <= n; ++i)
        p *= Polynomial::variable(ctx, var) - Polynomial::variable(ctx, "l" + std::to_string(i));
    return AmbientFactor{var, p};
}

AmbientRingSpec::AmbientRingSpec(ContextPtr ctx, std::vector<AmbientFactor> factors)
    : ctx_(std::move(ctx)), factors_(std::move(factors)) {
    std::vector<std::string> seen;
    for (const auto& f : factors_) {
        if (!same_context(f.relation.context(), ctx_))
            throw ContextMismatch("ambient factor relation context mismatch");
        for (const auto& s : seen)
            if (s == f.var) throw Error("ambient factors must use distinct variables");
        seen.push_back(f.var);
        long m = f.relation.degree_in(f.var);
        if (m == Polynomial::kMinusInfinity ||
            f.relation.coefficient_of(f.var, static_cast<int>(m)) !=
                Polynomial::constant(ctx_, 1))
            throw NotMonic("ambient factor relation not monic in '" + f.var + "'");
    }
}

Polynomial splitting_psi(const Polynomial& p, const AmbientRingSpec& spec) {
    Polynomial r = p;
    const auto& fs = spec.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it)
        r = reduce_mod_monic(r, it->relation, it->var);
    return r;
}

Polynomial pushforward_to_base(const Polynomial& p, const std::string& var, int m) {
    if (m < 1) throw Error("pushforward_to_base: fiber relation degree must be >= 1");
    if (p.degree_in(var) >= m)
        throw Error("pushforward_to_base: input not reduced in '" + var + "'");
    return p.coefficient_of(var, m - 1);
}

} // namespace chow
