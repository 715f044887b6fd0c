#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow/localization.hpp"
#include "chow/membership.hpp"
#include "chow/symmetric.hpp"

using namespace chow;

namespace {

struct Cubics {
    std::vector<Polynomial> alphas = alpha_generators(3, 3, "h");
    Polynomial delta2 = delta_class(3, 3, Partition({1, 2}));
    ContextPtr ctx = alphas.front().context();
    Polynomial h = Polynomial::variable(ctx, "h");
    Polynomial c1 = Polynomial::variable(ctx, "c1");
};

} // namespace

TEST_CASE("integer solver") {
    // 2x2 with torsion: x + y = 1, x - y = 0 has no integer solution
    IntMatrix A(2, 2);
    A.at(0, 0) = 1; A.at(0, 1) = 1;
    A.at(1, 0) = 1; A.at(1, 1) = -1;
    auto r = solve_integer(A, {Int(1), Int(0)});
    CHECK(!r.solvable);
    CHECK(r.failure == SolveFailure::divisibility);
    auto rq = solve_rational(A, {Int(1), Int(0)});
    CHECK(rq.solvable);
    CHECK(rq.x == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});

    // inconsistent system
    IntMatrix B(2, 1);
    B.at(0, 0) = 1;
    B.at(1, 0) = 2;
    auto rb = solve_integer(B, {Int(1), Int(1)});
    CHECK(!rb.solvable);
    CHECK(rb.failure == SolveFailure::rank_increase);

    // solvable system, solution verified against the equations
    IntMatrix C(2, 3);
    C.at(0, 0) = 2; C.at(0, 1) = 3; C.at(0, 2) = 5;
    C.at(1, 0) = 1; C.at(1, 1) = 0; C.at(1, 2) = 7;
    auto rc = solve_integer(C, {Int(11), Int(7)});  // e.g. (0, 2, 1)
    REQUIRE(rc.solvable);
    CHECK(Int(2) * rc.x[0] + Int(3) * rc.x[1] + Int(5) * rc.x[2] == 11);
    CHECK(rc.x[0] + Int(7) * rc.x[2] == 7);

    // mod-p solver
    auto rp = solve_mod_p(A, {Int(1), Int(0)}, 3);
    REQUIRE(rp.solvable);
    CHECK((rp.x[0] + rp.x[1]) % 3 == 1 % 3);
    auto rp2 = solve_mod_p(A, {Int(1), Int(0)}, 2);
    CHECK(!rp2.solvable);  // x+y and x-y agree mod 2

    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(!is_prime(1));
    CHECK(!is_prime(91));
}

TEST_CASE("torsion triple for plane cubics") {
    Cubics w;

    auto z = slice_membership(w.delta2, w.alphas, CoefficientRing::Z());
    CHECK(!z.member);
    CHECK(z.failure == SolveFailure::divisibility);  // rationally inside, integrally outside
    CHECK(z.degree == 2);

    auto f2 = slice_membership(w.delta2, w.alphas, CoefficientRing::Fp(2));
    CHECK(!f2.member);

    auto q = slice_membership(w.delta2, w.alphas, CoefficientRing::Q());
    CHECK(q.member);

    auto two = slice_membership(Int(2) * w.delta2, w.alphas, CoefficientRing::Z());
    REQUIRE(two.member);
    auto cof = integer_cofactors(two);
    REQUIRE(cof.size() == 3);
    CHECK(cof[0] == Int(5) * w.h - Int(3) * w.c1);
    CHECK(cof[1] == Polynomial::constant(w.ctx, -3));
    CHECK(cof[2].is_zero());
}

TEST_CASE("verify_identity") {
    Cubics w;
    Polynomial d32 = delta_class(3, 3, Partition({1, 1, 1}));
    auto c2 = Polynomial::variable(w.ctx, "c2");

    CHECK(verify_identity(d32, {{(w.h - w.c1) * (w.h - w.c1) + c2, w.alphas[0]},
                                {-w.c1, w.alphas[1]},
                                {Polynomial::constant(w.ctx, 3), w.alphas[2]}}));
    CHECK(verify_identity(Int(2) * w.delta2, {{Int(5) * w.h - Int(3) * w.c1, w.alphas[0]},
                                              {Polynomial::constant(w.ctx, -3), w.alphas[1]}}));
    // a wrong single-cofactor guess fails
    CHECK(!verify_identity(w.delta2, {{w.h, w.alphas[0]}}));
}

TEST_CASE("relation polynomial membership") {
    for (auto [n, d] : {std::pair<int, int>{3, 3}, {2, 2}, {2, 3}}) {
        auto cert = relation_polynomial_membership(n, d);
        REQUIRE(cert.member);
        CHECK(Int(cert.degree) == dim_W(n, d));

        // independent re-check through verify_identity
        auto ctx = c_context(n, {"x"});
        Polynomial target = transfer(
            to_chern_basis(total_relation(n, d, "x", l_context(n, {"x"})), n), ctx);
        auto alphas = alpha_generators(n, d, "x");
        auto cof = integer_cofactors(cert);
        std::vector<std::pair<Polynomial, Polynomial>> comb;
        for (std::size_t i = 0; i < alphas.size(); ++i)
            comb.emplace_back(transfer(cof[i], ctx), transfer(alphas[i], ctx));
        CHECK(verify_identity(target, comb));
    }
}

TEST_CASE("minimal generators") {
    Cubics w;
    auto gens = w.alphas;
    gens.push_back(w.delta2);

    auto report = minimal_generators_check(gens, {Int(2), Int(3)});
    REQUIRE(report.entries.size() == 4);
    CHECK(report.all_independent());

    // the decisive witnesses: delta2 fails mod 2, alpha2 fails mod 3
    CHECK(!report.entries[3].over_moduli[0].member);
    CHECK(!report.entries[1].over_moduli[1].member);

    // alpha3 is independent even over Q: no c3 appears in the others
    auto others = std::vector<Polynomial>{gens[0], gens[1], gens[3]};
    CHECK(!slice_membership(gens[2], others, CoefficientRing::Q()).member);

    // a scaled duplicate is redundant
    auto dup = minimal_generators_check({w.alphas[0], Int(2) * w.alphas[0]});
    CHECK(!dup.all_independent());
    CHECK(dup.entries[1].redundant);
    CHECK(!dup.entries[0].redundant);  // alpha1 is not a multiple of 2*alpha1 over Z

    // delta2 is rationally in the alpha ideal (forced, since 2*delta2 is in it)
    CHECK(slice_membership(w.delta2, w.alphas, CoefficientRing::Q()).member);
}

TEST_CASE("input validation and limits") {
    Cubics w;
    Polynomial inhom = w.h + w.h * w.h;
    CHECK_THROWS_AS(slice_membership(inhom, w.alphas, CoefficientRing::Z()), Error);
    CHECK_THROWS_AS(slice_membership(w.delta2, w.alphas, CoefficientRing::Z(), 3),
                    SliceLimitExceeded);
    CHECK_THROWS_AS(CoefficientRing::Fp(4), Error);

    // zero target is trivially a member
    auto cert = slice_membership(Polynomial::zero(w.ctx), w.alphas, CoefficientRing::Z());
    CHECK(cert.member);
}

TEST_CASE("consistency chain across rings") {
    Cubics w;
    // 2*delta2 is a member over Z, hence over Q and over every F_p
    Polynomial target = Int(2) * w.delta2;
    auto z = slice_membership(target, w.alphas, CoefficientRing::Z());
    REQUIRE(z.member);
    for (int p : {2, 3, 5, 7})
        CHECK(slice_membership(target, w.alphas, CoefficientRing::Fp(p)).member);
    CHECK(slice_membership(target, w.alphas, CoefficientRing::Q()).member);
}
