#pragma once

// The named polynomial classes of the theory: partition classes P_mu(x),
// the total relation P_[d](x) of the space of degree-d forms, the generating
// polynomial of the singular-incidence ideal and its alpha coefficients,
// classes of torus-invariant hypersurfaces and of torus-fixed points, top
// Chern classes of fixed-point tangent spaces, the splitting morphism psi,
// and pushforward along a projective-space factor.

#include <string>
#include <utility>
#include <vector>

#include "chow/combinatorics.hpp"
#include "chow/polynomial.hpp"

namespace chow {

/// P_mu(x) = prod over v in N^n(mu) of (x + v.l), expanded in the l-basis.
/// ctx must contain var and l1..ln. When mu has more parts than n the
/// product is empty and the result is 1.
Polynomial partition_class(int n, const Partition& mu, const std::string& var,
                           const ContextPtr& ctx);

/// P_[d](x) = prod over v in N^n(d) of (x + v.l): the monic degree-N relation
/// of the projective space of degree-d forms, N = dim_W(n, d).
Polynomial total_relation(int n, int d, const std::string& var, const ContextPtr& ctx);

/// Q_[d](x, y): the reduced class of the incidence locus of pairs
/// (hypersurface, singular point), equal to
///   P_{1}(x + (d-1)y) - (-(d-1))^n P_{1}(-y).
/// Its y^n coefficient vanishes identically, so it has y-degree <= n-1 and
/// decomposes as sum_{i=1..n} alpha_i(x) y^{n-i}. Emitted over Z[c1..cn] by
/// default; chern=false keeps the l-basis as a cross-check route.
Polynomial alpha_generating_poly(int n, int d, bool chern = true);

/// [alpha_1(var), ..., alpha_n(var)] extracted as y-coefficients of
/// alpha_generating_poly; alpha_i is homogeneous of weighted degree i over
/// Z[c1..cn].
std::vector<Polynomial> alpha_generators(int n, int d, const std::string& var = "x");

/// Class of the incidence locus itself: prod_i (x + (d-1)y + l_i) in the
/// l-basis, before reduction by the ambient relations.
Polynomial incidence_class(int n, int d);

/// Linear class deg.var summed over the listed (var, deg) pairs plus
/// character.l - the torus-equivariant class of an invariant hypersurface of
/// the given multidegree twisted by the given character.
Polynomial invariant_hypersurface_class(const ContextPtr& ctx,
                                        const std::vector<std::pair<std::string, int>>& degrees,
                                        const std::vector<Int>& character, int n);

/// [Q_v] for the fixed point v in N^n(d): prod over w != v of (var + w.l).
Polynomial fixed_point_class(const ExpVec& v, int n, int d, const std::string& var,
                             const ContextPtr& ctx);

/// Top Chern class of the tangent space at the fixed point v0 in N^n(k):
/// prod over v != v0 of (v - v0).l.
Polynomial tangent_top_chern(const ExpVec& v0, int n, int k, const ContextPtr& ctx);

/// One projective-space factor of an ambient product: a relation monic in its
/// own variable. Use the named constructors; the factor for the space of
/// points P(E) carries the load-bearing sign (its relation has roots +l_i,
/// i.e. it is the monic normalization of P_{1}(-var)).
struct AmbientFactor {
    std::string var;
    Polynomial relation;

    /// P(W_k) with hyperplane variable `var`: relation P_[k](var).
    static AmbientFactor forms(int n, int k, const std::string& var, const ContextPtr& ctx);
    /// P(E) with hyperplane variable `var`: relation prod_i (var - l_i).
    static AmbientFactor points(int n, const std::string& var, const ContextPtr& ctx);
};

/// Ambient product of projective-space factors over a common context.
class AmbientRingSpec {
public:
    AmbientRingSpec(ContextPtr ctx, std::vector<AmbientFactor> factors);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<AmbientFactor>& factors() const { return factors_; }

private:
    ContextPtr ctx_;
    std::vector<AmbientFactor> factors_;
};

/// The splitting morphism: the canonical representative of p with degree in
/// each factor variable below that factor's relation degree. Reduces factor
/// by factor, last factor first; the relations are monic in disjoint
/// variables, so the result does not depend on the order. Idempotent.
Polynomial splitting_psi(const Polynomial& p, const AmbientRingSpec& spec);

/// Pushforward along a projective factor of fiber dimension m-1: for p
/// already psi-reduced in `var`, the coefficient of var^(m-1).
Polynomial pushforward_to_base(const Polynomial& p, const std::string& var, int m);

/// (x + v.l) as a polynomial.
Polynomial point_weight_form(const ExpVec& v, int n, const std::string& var,
                             const ContextPtr& ctx);

} // namespace chow
