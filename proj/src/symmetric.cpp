#include "chow/symmetric.hpp"

#include <algorithm>
#include <numeric>

namespace chow {

namespace {

std::vector<int> l_indices(const ContextPtr& ctx, int n) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = ctx->index_of("l" + std::to_string(i + 1));
    return idx;
}

Polynomial apply_index_permutation(const Polynomial& p, const std::vector<int>& from,
                                   const std::vector<int>& to) {
    Polynomial r(p.context());
    for (const auto& [k, c] : p.terms()) {
        Exps e = k.exps;
        for (std::size_t j = 0; j < from.size(); ++j) e[to[j]] = k.exps[from[j]];
        r.add_term(std::move(e), c);
    }
    return r;
}

} // namespace

Polynomial elementary_symmetric(const ContextPtr& ctx, int n, int i) {
    if (i < 0 || i > n) throw Error("elementary_symmetric: index out of range");
    auto idx = l_indices(ctx, n);
    Polynomial r = Polynomial::zero(ctx);
    std::vector<int> choose(i);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == i) {
            Exps e(ctx->arity(), 0);
            for (int j : choose) e[idx[j]] = 1;
            r.add_term(std::move(e), 1);
            return;
        }
        for (int j = start; j <= n - (i - depth); ++j) {
            choose[depth] = j;
            self(self, j + 1, depth + 1);
        }
    };
    if (i == 0) return Polynomial::constant(ctx, 1);
    rec(rec, 0, 0);
    return r;
}

bool is_symmetric(const Polynomial& p, int n) {
    auto idx = l_indices(p.context(), n);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> from = {idx[i], idx[i + 1]};
        std::vector<int> to = {idx[i + 1], idx[i]};
        if (apply_index_permutation(p, from, to) != p) return false;
    }
    return true;
}

Polynomial symmetrize(const Polynomial& p, const std::vector<std::string>& orbit_vars) {
    const auto& ctx = p.context();
    std::vector<int> base;
    base.reserve(orbit_vars.size());
    for (const auto& name : orbit_vars) base.push_back(ctx->index_of(name));

    std::vector<int> perm(base.size());
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial total = Polynomial::zero(ctx);
    do {
        std::vector<int> to(base.size());
        for (std::size_t j = 0; j < base.size(); ++j) to[j] = base[perm[j]];
        total += apply_index_permutation(p, base, to);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Polynomial to_chern_basis(const Polynomial& p, int n) {
    const auto& ctx = p.context();
    auto idx = l_indices(ctx, n);
    if (!is_symmetric(p, n))
        throw NotSymmetric("to_chern_basis: input is not symmetric in l1..l" + std::to_string(n));

    // target context: the l-block replaced in place by c1..cn
    std::vector<std::string> names = ctx->names();
    std::map<std::string, std::string> rename;
    for (int i = 0; i < n; ++i) {
        names[idx[i]] = "c" + std::to_string(i + 1);
        rename["l" + std::to_string(i + 1)] = "c" + std::to_string(i + 1);
    }
    ContextPtr cctx = make_context(names);

    std::vector<Polynomial> elem;  // e_1..e_n in the l-context
    elem.reserve(n);
    for (int i = 1; i <= n; ++i) elem.push_back(elementary_symmetric(ctx, n, i));

    Polynomial work = p;
    Polynomial result = Polynomial::zero(cctx);
    while (!work.is_zero()) {
        // lex-greatest l-exponent pattern among the terms
        const Exps* best = nullptr;
        auto l_part = [&](const Exps& e, int i) { return e[idx[i]]; };
        for (const auto& [k, c] : work.terms()) {
            if (!best) { best = &k.exps; continue; }
            for (int i = 0; i < n; ++i) {
                if (l_part(k.exps, i) != l_part(*best, i)) {
                    if (l_part(k.exps, i) > l_part(*best, i)) best = &k.exps;
                    break;
                }
            }
        }
        Exps a(n);
        for (int i = 0; i < n; ++i) a[i] = (*best)[idx[i]];
        for (int i = 0; i + 1 < n; ++i)
            if (a[i] < a[i + 1])
                throw NotSymmetric("to_chern_basis: leading l-exponents not descending");

        // inert coefficient of l^a
        Polynomial coeff(ctx);
        for (const auto& [k, c] : work.terms()) {
            bool match = true;
            for (int i = 0; i < n; ++i)
                if (k.exps[idx[i]] != a[i]) { match = false; break; }
            if (!match) continue;
            Exps e = k.exps;
            for (int i = 0; i < n; ++i) e[idx[i]] = 0;
            coeff.add_term(std::move(e), c);
        }

        // matching product of elementary symmetric polynomials and its c-image
        Polynomial mono_l = Polynomial::constant(ctx, 1);
        Exps ce(cctx->arity(), 0);
        long sign_exp = 0;
        for (int i = 0; i < n; ++i) {
            int m = a[i] - (i + 1 < n ? a[i + 1] : 0);
            if (m == 0) continue;
            mono_l *= elem[i].pow(m);
            ce[idx[i]] = m;          // c_{i+1} occupies the slot of l_{i+1}
            sign_exp += static_cast<long>(i + 1) * m;
        }
        Polynomial cmono = Polynomial::monomial(cctx, std::move(ce), (sign_exp % 2) ? -1 : 1);

        result += transfer(coeff, cctx, rename) * cmono;
        work -= coeff * mono_l;
    }
    return result;
}

Polynomial expand_chern(const Polynomial& p, int n) {
    const auto& ctx = p.context();
    auto is_cvar = [&](const std::string& nm) {
        for (int i = 1; i <= n; ++i)
            if (nm == "c" + std::to_string(i)) return true;
        return false;
    };
    bool have_l = ctx->has("l1");

    std::vector<std::string> names;
    if (have_l) {
        // l-variables already present: drop the c-block
        for (const auto& nm : ctx->names())
            if (!is_cvar(nm)) names.push_back(nm);
    } else {
        // replace the c-block in place, so round-trips preserve the context
        for (const auto& nm : ctx->names()) {
            if (is_cvar(nm))
                names.push_back("l" + nm.substr(1));
            else
                names.push_back(nm);
        }
        for (int i = 1; i <= n; ++i) {
            std::string li = "l" + std::to_string(i);
            if (std::find(names.begin(), names.end(), li) == names.end()) names.push_back(li);
        }
    }
    ContextPtr lctx = make_context(names);

    std::map<std::string, Polynomial> bindings;
    for (int i = 1; i <= n; ++i) {
        if (!ctx->has("c" + std::to_string(i))) continue;
        Polynomial s = elementary_symmetric(lctx, n, i);
        bindings.emplace("c" + std::to_string(i), (i % 2) ? -s : s);
    }
    if (bindings.empty()) return transfer(p, lctx);
    return substitute(p, bindings, lctx);
}

} // namespace chow
