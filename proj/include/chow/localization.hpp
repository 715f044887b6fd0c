#pragma once

// Torus localization on products of projective spaces of forms: classes
// delta_mu of loci of reducible hypersurfaces and pushforwards of monomials
// in the factor hyperplane classes, evaluated as exact sums over fixed
// points. Summands are independent pure computations; the parallel kernel
// and the serial reference produce bit-identical results because the
// rational-class sum is exactly associative.

#include <map>
#include <optional>
#include <vector>

#include "chow/classes.hpp"
#include "chow/combinatorics.hpp"
#include "chow/polynomial.hpp"

namespace chow {

enum class Exec { serial, parallel };

struct PolyBefore {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        return ordering(a, b) == std::strong_ordering::less;
    }
};

/// Denominator factors kept in factored form: primitive polynomial -> multiplicity.
using FactorMap = std::map<Polynomial, int, PolyBefore>;

/// numerator / (scale * prod factors^mult), with scale > 0 and every factor
/// primitive with positive leading coefficient. Addition combines over the
/// factored least common multiple, which keeps the representation canonical
/// and the operation exactly associative and commutative (so parallel
/// reductions are schedule independent).
class RationalClass {
public:
    RationalClass(Polynomial num, Int scale, FactorMap factors);

    const Polynomial& numerator() const { return num_; }
    const Int& denominator_scale() const { return scale_; }
    const FactorMap& denominator_factors() const { return factors_; }
    /// Expanded denominator polynomial (scale times the factor product).
    Polynomial denominator() const;

    RationalClass& operator+=(const RationalClass& o);
    friend RationalClass operator+(RationalClass a, const RationalClass& b) {
        a += b;
        return a;
    }

    /// Exact quotient if the denominator divides the numerator.
    std::optional<Polynomial> try_to_polynomial() const;
    /// Same, but throws ExactnessError with the failing stage.
    Polynomial to_polynomial(const std::string& what) const;

private:
    Polynomial num_;
    Int scale_;
    FactorMap factors_;
};

/// A fixed point of the product space: one exponent vector per factor.
struct ProductFixedPoint {
    std::vector<ExpVec> components;
    ExpVec total() const;
};

/// delta_mu(n, d): the class of the locus of degree-d hypersurfaces splitting
/// into factors with degree pattern mu, as a polynomial in (h, c1..cn).
/// The full fixed-point sum is combined exactly; the denominator clearing,
/// the division by the product-map degree and the symmetry of the result are
/// each enforced and raise distinct ExactnessError diagnostics on failure.
/// When mu has more parts than n the fixed-support set N^n(mu) is empty; the
/// convention here is to warn and return 0.
Polynomial delta_class(int n, int d, const Partition& mu, Exec exec = Exec::parallel);

/// Raw pushforward along the product map pi_mu of the monomial
/// prod_j xi_j^(e_j) in the factor hyperplane classes; NOT divided by
/// deg(pi_mu). chern=false keeps the result in the l-basis.
Polynomial pushforward_product_map(int n, int d, const Partition& mu, const std::vector<int>& e,
                                   Exec exec = Exec::parallel, bool chern = true);

/// Substitute the fixed-point restrictions xi_j -> -v_j.l (and h -> -(sum v_j).l
/// when h is present); the result is a polynomial in l alone.
Polynomial restrict_to_fixed_point(const Polynomial& p, const ProductFixedPoint& pt, int n);

struct UnitCheckResult {
    bool ok;
    Polynomial residual;  // numerator - denominator of the combined sum; 0 iff ok
};

/// Verifies sum over v in N^n(k) of [Q_v]/c_top(T_v) == 1 exactly.
UnitCheckResult localization_unit_check(int n, int k);

/// Consistency of the restriction sign convention: for every v in N^n(k),
/// restricting [Q_v] at Q_v must give the tangent top Chern class. Runs once
/// per (n, k); throws on failure. Called by the engine entry points.
void ensure_restriction_consistency(int n, int k);

/// Signed factored form of tangent_top_chern (scale times primitive factors).
std::pair<Int, FactorMap> tangent_chern_factors(const ExpVec& v0, int n, int k,
                                                const ContextPtr& ctx);

} // namespace chow
