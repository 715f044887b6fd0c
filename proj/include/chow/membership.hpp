#pragma once

// Ideal membership in weighted-graded polynomial rings over Z, Q and F_p by
// graded linear algebra: a homogeneous target of degree D lies in a
// homogeneous ideal iff it lies in the span of the degree-D multiples of the
// generators, which is a finite linear system. Member certificates carry
// cofactors and are re-verified by exact multiplication, unconditionally;
// non-membership is certified per ring by the rank/divisibility data of the
// slice system.

#include <optional>
#include <string>
#include <vector>

#include "chow/hnf.hpp"
#include "chow/polynomial.hpp"

namespace chow {

struct CoefficientRing {
    enum class Kind { integers, rationals, mod };
    Kind kind;
    Int modulus;  // >= 2 iff kind == mod

    static CoefficientRing Z() { return {Kind::integers, 0}; }
    static CoefficientRing Q() { return {Kind::rationals, 0}; }
    static CoefficientRing Fp(Int p);

    std::string name() const;
    friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
        return a.kind == b.kind && a.modulus == b.modulus;
    }
};

/// The degree-D slice of an ideal: a monomial basis of weighted degree D and
/// the matrix whose columns are the degree-D multiples (monomial x generator)
/// expressed in that basis.
struct GradedSlice {
    long degree = 0;
    std::vector<Exps> basis;                       // canonical order
    IntMatrix matrix;                              // basis.size() x columns
    std::vector<std::pair<int, Exps>> columns;     // (generator index, multiplier monomial)

    static GradedSlice build(const ContextPtr& ctx, long degree,
                             const std::vector<Polynomial>& generators,
                             std::size_t size_limit);
};

struct MembershipCertificate {
    bool member = false;
    CoefficientRing ring = CoefficientRing::Z();
    long degree = 0;
    // member: one cofactor per generator, sum cofactor_i * generator_i == target
    // (kept rational so one type serves Z, Q and F_p representatives)
    std::vector<QPolynomial> cofactors;
    // non-member: slice rank data
    int rank = 0;
    int augmented_rank = 0;
    SolveFailure failure = SolveFailure::none;

    std::string verdict() const { return member ? "member" : "non-member"; }
};

/// Decide membership of a homogeneous target in the homogeneous ideal
/// generated by `generators`, over the requested ring. Throws on
/// inhomogeneous input; Member certificates are re-verified before return.
MembershipCertificate slice_membership(const Polynomial& target,
                                       const std::vector<Polynomial>& generators,
                                       const CoefficientRing& ring,
                                       std::size_t size_limit = 5000);

/// True iff lhs == sum of cofactor*generator, exactly.
bool verify_identity(const Polynomial& lhs,
                     const std::vector<std::pair<Polynomial, Polynomial>>& combination);

/// Integer cofactors for P_[d](x) in the ideal (alpha_1(x), ..., alpha_n(x))
/// over Z[c1..cn][x], searched in the single slice of degree N = dim_W(n, d).
MembershipCertificate relation_polynomial_membership(int n, int d,
                                                     std::size_t size_limit = 5000);

struct GeneratorReportEntry {
    int index = 0;                                 // which generator
    MembershipCertificate over_Z;                  // in the ideal of the others?
    std::vector<MembershipCertificate> over_moduli;
    bool redundant = false;                        // member over Z of the others
};

struct MinimalGeneratorsReport {
    std::vector<GeneratorReportEntry> entries;
    bool all_independent() const;
};

/// For each generator, certify (non-)membership in the ideal of the others
/// over Z and over each listed modulus, checking the Z => F_p => Q
/// consistency chain along the way.
MinimalGeneratorsReport minimal_generators_check(const std::vector<Polynomial>& generators,
                                                 const std::vector<Int>& moduli = {});

/// Cofactors of a member certificate as integer polynomials (throws if any
/// coefficient is not integral).
std::vector<Polynomial> integer_cofactors(const MembershipCertificate& cert);

} // namespace chow
