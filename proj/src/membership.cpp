#include "chow/membership.hpp"

#include <algorithm>

#include "chow/classes.hpp"
#include "chow/combinatorics.hpp"
#include "chow/symmetric.hpp"

namespace chow {

CoefficientRing CoefficientRing::Fp(Int p) {
    if (!is_prime(p)) throw Error("F_p requires a prime modulus, got " + p.str());
    return {Kind::mod, std::move(p)};
}

std::string CoefficientRing::name() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::mod: return "F" + modulus.str();
    }
    return "?";
}

namespace {

/// All exponent vectors of weighted degree D in ctx, canonical order.
std::vector<Exps> monomials_of_degree(const ContextPtr& ctx, long D) {
    std::vector<Exps> out;
    Exps cur(ctx->arity(), 0);
    auto rec = [&](auto&& self, int pos, long rest) -> void {
        if (pos == ctx->arity()) {
            if (rest == 0) out.push_back(cur);
            return;
        }
        int w = ctx->weight(pos);
        for (long e = 0; e * w <= rest; ++e) {
            cur[pos] = static_cast<int>(e);
            self(self, pos + 1, rest - e * w);
            cur[pos] = 0;
        }
    };
    rec(rec, 0, D);
    // canonical term order (descending), same as polynomial printing
    std::sort(out.begin(), out.end(), [&](const Exps& a, const Exps& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    });
    return out;
}

long homogeneous_degree_of(const Polynomial& p, const std::string& role) {
    if (p.is_zero()) return Polynomial::kMinusInfinity;
    if (!p.is_homogeneous()) throw Error(role + " is not homogeneous in the weighted grading");
    return p.weighted_degree();
}

} // namespace

GradedSlice GradedSlice::build(const ContextPtr& ctx, long degree,
                               const std::vector<Polynomial>& generators,
                               std::size_t size_limit) {
    auto basis = monomials_of_degree(ctx, degree);
    if (basis.size() > size_limit)
        throw SliceLimitExceeded("graded slice has " + std::to_string(basis.size()) +
                                 " monomials, exceeding the limit of " +
                                 std::to_string(size_limit));
    std::map<Exps, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::vector<std::pair<int, Exps>> columns;
    for (int gi = 0; gi < static_cast<int>(generators.size()); ++gi) {
        long gd = homogeneous_degree_of(generators[gi], "generator");
        if (gd == Polynomial::kMinusInfinity || gd > degree) continue;
        for (const auto& m : monomials_of_degree(ctx, degree - gd)) columns.emplace_back(gi, m);
    }

    GradedSlice slice{degree, std::move(basis), IntMatrix(static_cast<int>(index.size()),
                                                          static_cast<int>(columns.size())),
                      std::move(columns)};

    // fill columns; independent of each other, cheap enough serially
    for (int c = 0; c < static_cast<int>(slice.columns.size()); ++c) {
        const auto& [gi, mono] = slice.columns[c];
        Polynomial prod = Polynomial::monomial(ctx, mono, 1) * generators[gi];
        for (const auto& [k, coeff] : prod.terms()) {
            auto it = index.find(k.exps);
            if (it == index.end()) throw Error("slice column left the degree slice");
            slice.matrix.at(it->second, c) = coeff;
        }
    }
    return slice;
}

namespace {

std::vector<QPolynomial> assemble_cofactors(const ContextPtr& ctx, const GradedSlice& slice,
                                            std::size_t gen_count,
                                            const std::vector<Rat>& solution) {
    std::vector<QPolynomial> cof;
    cof.reserve(gen_count);
    for (std::size_t i = 0; i < gen_count; ++i) cof.push_back(QPolynomial::zero(ctx));
    for (std::size_t c = 0; c < slice.columns.size(); ++c) {
        if (solution[c] == 0) continue;
        const auto& [gi, mono] = slice.columns[c];
        cof[gi] += QPolynomial::monomial(ctx, mono, solution[c]);
    }
    return cof;
}

void reverify_member(const Polynomial& target, const std::vector<Polynomial>& generators,
                     const MembershipCertificate& cert) {
    const auto& ctx = target.context();
    switch (cert.ring.kind) {
        case CoefficientRing::Kind::integers: {
            Polynomial sum = Polynomial::zero(ctx);
            for (std::size_t i = 0; i < generators.size(); ++i)
                sum += to_integer(cert.cofactors[i]) * generators[i];
            if (sum != target) throw Error("member certificate failed re-verification over Z");
            break;
        }
        case CoefficientRing::Kind::rationals: {
            QPolynomial sum = QPolynomial::zero(ctx);
            for (std::size_t i = 0; i < generators.size(); ++i)
                sum += cert.cofactors[i] * to_rational(generators[i]);
            if (sum != to_rational(target))
                throw Error("member certificate failed re-verification over Q");
            break;
        }
        case CoefficientRing::Kind::mod: {
            ModPolynomial sum = ModPolynomial::zero(ctx);
            for (std::size_t i = 0; i < generators.size(); ++i)
                sum += to_mod(to_integer(cert.cofactors[i]), cert.ring.modulus) *
                       to_mod(generators[i], cert.ring.modulus);
            if (sum != to_mod(target, cert.ring.modulus))
                throw Error("member certificate failed re-verification over " + cert.ring.name());
            break;
        }
    }
}

} // namespace

MembershipCertificate slice_membership(const Polynomial& target,
                                       const std::vector<Polynomial>& generators,
                                       const CoefficientRing& ring, std::size_t size_limit) {
    const auto& ctx = target.context();
    for (const auto& g : generators)
        if (!same_context(g.context(), ctx))
            throw ContextMismatch("slice_membership: generator context mismatch");
    long D = homogeneous_degree_of(target, "target");
    MembershipCertificate cert;
    cert.ring = ring;
    if (D == Polynomial::kMinusInfinity) {
        // zero target is trivially a member with zero cofactors
        cert.member = true;
        cert.degree = 0;
        for (std::size_t i = 0; i < generators.size(); ++i)
            cert.cofactors.push_back(QPolynomial::zero(ctx));
        return cert;
    }
    cert.degree = D;

    GradedSlice slice = GradedSlice::build(ctx, D, generators, size_limit);
    std::vector<Int> rhs(slice.basis.size(), 0);
    {
        std::map<Exps, int> index;
        for (std::size_t i = 0; i < slice.basis.size(); ++i)
            index[slice.basis[i]] = static_cast<int>(i);
        for (const auto& [k, c] : target.terms()) rhs[index.at(k.exps)] = c;
    }

    switch (ring.kind) {
        case CoefficientRing::Kind::integers: {
            auto sol = solve_integer(slice.matrix, rhs);
            cert.rank = sol.rank;
            cert.augmented_rank = sol.augmented_rank;
            cert.failure = sol.failure;
            cert.member = sol.solvable;
            if (sol.solvable) {
                std::vector<Rat> x(sol.x.begin(), sol.x.end());
                cert.cofactors = assemble_cofactors(ctx, slice, generators.size(), x);
            }
            break;
        }
        case CoefficientRing::Kind::rationals: {
            auto sol = solve_rational(slice.matrix, rhs);
            cert.rank = sol.rank;
            cert.augmented_rank = sol.augmented_rank;
            cert.failure = sol.solvable ? SolveFailure::none : SolveFailure::rank_increase;
            cert.member = sol.solvable;
            if (sol.solvable)
                cert.cofactors = assemble_cofactors(ctx, slice, generators.size(), sol.x);
            break;
        }
        case CoefficientRing::Kind::mod: {
            auto sol = solve_mod_p(slice.matrix, rhs, ring.modulus);
            cert.rank = sol.rank;
            cert.augmented_rank = sol.augmented_rank;
            cert.failure = sol.solvable ? SolveFailure::none : SolveFailure::rank_increase;
            cert.member = sol.solvable;
            if (sol.solvable) {
                std::vector<Rat> x(sol.x.begin(), sol.x.end());
                cert.cofactors = assemble_cofactors(ctx, slice, generators.size(), x);
            }
            break;
        }
    }
    if (cert.member) reverify_member(target, generators, cert);
    return cert;
}

bool verify_identity(const Polynomial& lhs,
                     const std::vector<std::pair<Polynomial, Polynomial>>& combination) {
    if (combination.empty()) return lhs.is_zero();
    Polynomial sum = Polynomial::zero(lhs.context());
    for (const auto& [cofactor, generator] : combination) sum += cofactor * generator;
    return sum == lhs;
}

MembershipCertificate relation_polynomial_membership(int n, int d, std::size_t size_limit) {
    auto ctx = c_context(n, {"x"});
    Polynomial target = to_chern_basis(total_relation(n, d, "x", l_context(n, {"x"})), n);
    target = transfer(target, ctx);
    auto alphas = alpha_generators(n, d, "x");
    for (auto& a : alphas) a = transfer(a, ctx);
    auto cert = slice_membership(target, alphas, CoefficientRing::Z(), size_limit);
    return cert;
}

std::vector<Polynomial> integer_cofactors(const MembershipCertificate& cert) {
    std::vector<Polynomial> out;
    out.reserve(cert.cofactors.size());
    for (const auto& c : cert.cofactors) out.push_back(to_integer(c));
    return out;
}

bool MinimalGeneratorsReport::all_independent() const {
    for (const auto& e : entries)
        if (e.redundant) return false;
    return true;
}

MinimalGeneratorsReport minimal_generators_check(const std::vector<Polynomial>& generators,
                                                 const std::vector<Int>& moduli) {
    MinimalGeneratorsReport report;
    for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
        std::vector<Polynomial> others;
        for (int j = 0; j < static_cast<int>(generators.size()); ++j)
            if (j != i) others.push_back(generators[j]);

        GeneratorReportEntry entry;
        entry.index = i;
        entry.over_Z = slice_membership(generators[i], others, CoefficientRing::Z());
        entry.redundant = entry.over_Z.member;
        for (const auto& p : moduli)
            entry.over_moduli.push_back(
                slice_membership(generators[i], others, CoefficientRing::Fp(p)));

        // consistency chain: member over Z implies member over every F_p and over Q
        if (entry.over_Z.member) {
            for (const auto& c : entry.over_moduli)
                if (!c.member)
                    throw Error("consistency violation: member over Z but not over " +
                                c.ring.name());
            auto q = slice_membership(generators[i], others, CoefficientRing::Q());
            if (!q.member) throw Error("consistency violation: member over Z but not over Q");
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace chow
