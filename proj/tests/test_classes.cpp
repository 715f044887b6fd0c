#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chow/classes.hpp"
#include "chow/symmetric.hpp"

using namespace chow;

namespace {

Polynomial lvar(const ContextPtr& ctx, int i) {
    return Polynomial::variable(ctx, "l" + std::to_string(i));
}

} // namespace

TEST_CASE("partition classes match their displayed factorizations") {
    auto ctx = l_context(3, {"x"});
    auto x = Polynomial::variable(ctx, "x");
    auto l1 = lvar(ctx, 1), l2 = lvar(ctx, 2), l3 = lvar(ctx, 3);

    Polynomial p211 = partition_class(3, Partition({1, 1, 2}), "x", ctx);
    CHECK(p211 == (x + Int(2) * l1 + l2 + l3) * (x + l1 + Int(2) * l2 + l3) *
                      (x + l1 + l2 + Int(2) * l3));

    Polynomial p31 = partition_class(3, Partition({1, 3}), "x", ctx);
    CHECK(p31 == (x + Int(3) * l1 + l2) * (x + Int(3) * l1 + l3) * (x + Int(3) * l2 + l1) *
                     (x + Int(3) * l2 + l3) * (x + Int(3) * l3 + l1) * (x + Int(3) * l3 + l2));

    auto ctx1 = l_context(1, {"x"});
    Polynomial pd = partition_class(1, Partition({4}), "x", ctx1);
    CHECK(pd == Polynomial::variable(ctx1, "x") + Int(4) * lvar(ctx1, 1));

    // more parts than variables: empty product
    CHECK(partition_class(2, Partition({1, 1, 1}), "x", l_context(2, {"x"})) ==
          Polynomial::constant(l_context(2, {"x"}), 1));
}

TEST_CASE("total relation") {
    auto ctx = l_context(3, {"x"});
    Polynomial p = total_relation(3, 3, "x", ctx);
    CHECK(p.degree_in("x") == 10);
    CHECK(p.coefficient_of("x", 10) == Polynomial::constant(ctx, 1));  // monic
    CHECK(is_symmetric(p, 3));

    auto ctx1 = l_context(1, {"x"});
    CHECK(total_relation(1, 7, "x", ctx1) ==
          Polynomial::variable(ctx1, "x") + Int(7) * lvar(ctx1, 1));

    auto ctx2 = l_context(2, {"x"});
    auto x = Polynomial::variable(ctx2, "x");
    auto m1 = lvar(ctx2, 1), m2 = lvar(ctx2, 2);
    CHECK(total_relation(2, 2, "x", ctx2) ==
          (x + Int(2) * m1) * (x + Int(2) * m2) * (x + m1 + m2));
}

TEST_CASE("alpha generating polynomial") {
    SUBCASE("plane cubics coefficients") {
        Polynomial q = alpha_generating_poly(3, 3);
        const auto& ctx = q.context();
        auto x = Polynomial::variable(ctx, "x");
        auto c1 = Polynomial::variable(ctx, "c1");
        auto c2 = Polynomial::variable(ctx, "c2");
        auto c3 = Polynomial::variable(ctx, "c3");
        CHECK(q.coefficient_of("y", 3).is_zero());
        CHECK(q.coefficient_of("y", 2) == Int(12) * x - Int(12) * c1);
        CHECK(q.coefficient_of("y", 0) == x.pow(3) - c1 * x * x + c2 * x - Int(9) * c3);
    }
    SUBCASE("y-degree bound across the grid") {
        for (int n = 2; n <= 4; ++n)
            for (int d = 2; d <= 5; ++d)
                CHECK(alpha_generating_poly(n, d, false).degree_in("y") <= n - 1);
    }
    SUBCASE("n = 2 coefficient of y") {
        for (int d = 2; d <= 6; ++d) {
            Polynomial q = alpha_generating_poly(2, d);
            const auto& ctx = q.context();
            auto x = Polynomial::variable(ctx, "x");
            auto c1 = Polynomial::variable(ctx, "c1");
            CHECK(q.coefficient_of("y", 1) ==
                  Int(2 * (d - 1)) * x - Int(d * (d - 1)) * c1);
        }
    }
}

TEST_CASE("alpha generators") {
    SUBCASE("(3,3) frozen values") {
        auto alphas = alpha_generators(3, 3);
        REQUIRE(alphas.size() == 3);
        const auto& ctx = alphas[0].context();
        auto x = Polynomial::variable(ctx, "x");
        auto c1 = Polynomial::variable(ctx, "c1");
        auto c2 = Polynomial::variable(ctx, "c2");
        auto c3 = Polynomial::variable(ctx, "c3");
        CHECK(alphas[0] == Int(12) * (x - c1));
        CHECK(alphas[1] == Int(6) * x * x - Int(4) * x * c1 - Int(6) * c2);
        CHECK(alphas[2] == x.pow(3) - x * x * c1 + x * c2 - Int(9) * c3);
    }
    SUBCASE("(2,d) closed form") {
        for (int d = 2; d <= 6; ++d) {
            auto alphas = alpha_generators(2, d);
            REQUIRE(alphas.size() == 2);
            const auto& ctx = alphas[0].context();
            auto x = Polynomial::variable(ctx, "x");
            auto c1 = Polynomial::variable(ctx, "c1");
            auto c2 = Polynomial::variable(ctx, "c2");
            CHECK(alphas[0] == Int(2 * (d - 1)) * x - Int(d * (d - 1)) * c1);
            CHECK(alphas[1] == x * x - c1 * x - Int(d * (d - 2)) * c2);
        }
    }
    SUBCASE("(3,2) internal consistency") {
        auto alphas = alpha_generators(3, 2);
        REQUIRE(alphas.size() == 3);
        for (int i = 0; i < 3; ++i) {
            CHECK(alphas[i].is_homogeneous());
            CHECK(alphas[i].weighted_degree() == i + 1);
        }
        // Q(x, 1) decomposes into the alphas by homogeneous degree
        Polynomial q = alpha_generating_poly(3, 2);
        Polynomial q_at_1 = Polynomial::zero(alphas[0].context());
        for (int j = 0; j <= 2; ++j)
            q_at_1 += transfer(q.coefficient_of("y", j), alphas[0].context());
        Polynomial sum = alphas[0] + alphas[1] + alphas[2];
        CHECK(q_at_1 == sum);
    }
    SUBCASE("weighted homogeneity") {
        for (int n = 2; n <= 3; ++n)
            for (int d = 2; d <= 4; ++d) {
                auto alphas = alpha_generators(n, d);
                for (int i = 0; i < n; ++i) CHECK(alphas[i].weighted_degree() == i + 1);
            }
    }
}

TEST_CASE("incidence class") {
    auto q = incidence_class(3, 3);
    const auto& ctx = q.context();
    auto x = Polynomial::variable(ctx, "x");
    auto y = Polynomial::variable(ctx, "y");
    CHECK(q == (x + Int(2) * y + lvar(ctx, 1)) * (x + Int(2) * y + lvar(ctx, 2)) *
                   (x + Int(2) * y + lvar(ctx, 3)));

    // same thing as substituting t -> x + (d-1) y into P_{1}(t)
    auto tctx = l_context(3, {"t"});
    Polynomial p1 = partition_class(3, Partition({1}), "t", tctx);
    std::map<std::string, Polynomial> bind;
    bind.emplace("t", x + Int(2) * y);
    CHECK(substitute(p1, bind, ctx) == q);

    // psi-reduction in the two-factor ambient ring recovers the generating polynomial
    for (int n = 2; n <= 3; ++n)
        for (int d = 2; d <= 4; ++d) {
            auto lctx = l_context(n, {"x", "y"});
            AmbientRingSpec spec(lctx, {AmbientFactor::forms(n, d, "x", lctx),
                                        AmbientFactor::points(n, "y", lctx)});
            Polynomial reduced = splitting_psi(incidence_class(n, d), spec);
            CHECK(reduced == alpha_generating_poly(n, d, false));
        }
}

TEST_CASE("factorization identity for the generating polynomial") {
    // P_{d}(x) * P_{d-1,1}(x) == prod_i Q_[d](x, l_i), exactly
    for (auto [n, d] : {std::pair<int, int>{3, 3}, {2, 3}}) {
        auto lctx = l_context(n, {"x"});
        Polynomial lhs = partition_class(n, Partition({d}), "x", lctx) *
                         partition_class(n, Partition({1, d - 1}), "x", lctx);
        Polynomial q = alpha_generating_poly(n, d, /*chern=*/false);
        Polynomial rhs = Polynomial::constant(lctx, 1);
        for (int i = 1; i <= n; ++i) {
            std::map<std::string, Polynomial> bind;
            bind.emplace("y", Polynomial::variable(lctx, "l" + std::to_string(i)));
            rhs *= substitute(q, bind, lctx);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reduction of a pure power against an incremental oracle") {
    // x^10 mod P_[3](x) for n = 3: the canonical representative of the tenth
    // power of the hyperplane class, degree <= 9 in x. The oracle reduces
    // incrementally (multiply by x, subtract the leading multiple of the
    // relation), a different control path from the division routine.
    auto ctx = l_context(3, {"x"});
    Polynomial rel = total_relation(3, 3, "x", ctx);
    const auto x = Polynomial::variable(ctx, "x");

    Polynomial incremental = Polynomial::constant(ctx, 1);
    for (int i = 0; i < 10; ++i) {
        incremental *= x;
        long dx = incremental.degree_in("x");
        if (dx >= 10) incremental -= incremental.coefficient_of("x", 10) * rel;
    }

    auto [quot, rem] = divmod_monic(x.pow(10), rel, "x");
    CHECK(rem.degree_in("x") <= 9);
    CHECK(rem == incremental);
    CHECK(quot * rel + rem == x.pow(10));
}

TEST_CASE("invariant hypersurface classes") {
    auto ctx = l_context(3, {"h", "t"});
    auto h = Polynomial::variable(ctx, "h");
    auto t = Polynomial::variable(ctx, "t");

    // partial-derivative hyperplane: degree 1 on the form space, d-1 on the
    // point space, twisted by the i-th standard character
    Polynomial f1 = invariant_hypersurface_class(ctx, {{"h", 1}, {"t", 2}}, {1, 0, 0}, 3);
    CHECK(f1 == h + Int(2) * t + lvar(ctx, 1));

    // the two factors of the line-meets-conic incidence class
    auto ctx2 = l_context(3, {"x", "y", "z"});
    CHECK(invariant_hypersurface_class(ctx2, {{"x", 1}, {"z", 1}}, {}, 3) ==
          Polynomial::variable(ctx2, "x") + Polynomial::variable(ctx2, "z"));
    CHECK(invariant_hypersurface_class(ctx2, {{"y", 1}, {"z", 2}}, {}, 3) ==
          Polynomial::variable(ctx2, "y") + Int(2) * Polynomial::variable(ctx2, "z"));

    // trivial character
    CHECK(invariant_hypersurface_class(ctx, {{"h", 5}}, {0, 0, 0}, 3) == Int(5) * h);
}

TEST_CASE("fixed point classes") {
    auto ctx1 = l_context(1, {"h"});
    CHECK(fixed_point_class({3}, 1, 3, "h", ctx1) == Polynomial::constant(ctx1, 1));

    auto ctx = l_context(3, {"h"});
    Polynomial fp = fixed_point_class({3, 0, 0}, 3, 3, "h", ctx);
    CHECK(fp.degree_in("h") == 9);

    // defining identity: [Q_v] * (h + v.l) == P_[d](h), for every v
    Polynomial relation = total_relation(3, 3, "h", ctx);
    for (const auto& v : vectors_of_weight(3, 3))
        CHECK(fixed_point_class(v, 3, 3, "h", ctx) * point_weight_form(v, 3, "h", ctx) ==
              relation);

    CHECK_THROWS_AS(fixed_point_class({1, 0, 0}, 3, 3, "h", ctx), Error);
}

TEST_CASE("tangent top Chern classes match the displayed products") {
    auto ctx = l_context(3);
    auto l1 = lvar(ctx, 1), l2 = lvar(ctx, 2), l3 = lvar(ctx, 3);

    CHECK(tangent_top_chern({1, 0, 0}, 3, 1, ctx) == (l2 - l1) * (l3 - l1));
    CHECK(tangent_top_chern({2, 0, 0}, 3, 2, ctx) ==
          Int(4) * (l2 - l1).pow(2) * (l3 - l1).pow(2) * (l2 + l3 - Int(2) * l1));
    CHECK(tangent_top_chern({1, 1, 0}, 3, 2, ctx) ==
          -(l1 - l2).pow(2) * (Int(2) * l3 - l1 - l2) * (l3 - l1) * (l3 - l2));

    CHECK_THROWS_AS(tangent_top_chern({1, 0, 0}, 3, 2, ctx), Error);
}

TEST_CASE("splitting morphism") {
    auto ctx = l_context(3, {"x", "y"});
    AmbientRingSpec spec(ctx, {AmbientFactor::forms(3, 2, "x", ctx),
                               AmbientFactor::points(3, "y", ctx)});

    // the relation itself reduces to zero
    CHECK(splitting_psi(total_relation(3, 2, "x", ctx), spec).is_zero());

    std::mt19937_64 rng(86);
    std::uniform_int_distribution<int> coeff(-10, 10);
    std::uniform_int_distribution<int> expo(0, 7);
    auto random_poly = [&]() {
        Polynomial p = Polynomial::zero(ctx);
        for (int t = 0; t < 6; ++t) {
            Exps e(ctx->arity());
            for (auto& v : e) v = expo(rng);
            p.add_term(std::move(e), Int(coeff(rng)));
        }
        return p;
    };

    // idempotence, factor-order independence and base-linearity on random inputs
    AmbientRingSpec reversed(ctx, {AmbientFactor::points(3, "y", ctx),
                                   AmbientFactor::forms(3, 2, "x", ctx)});
    for (int t = 0; t < 15; ++t) {
        Polynomial p = random_poly();
        Polynomial r = splitting_psi(p, spec);
        CHECK(splitting_psi(r, spec) == r);
        CHECK(splitting_psi(p, reversed) == r);
        CHECK(r.degree_in("x") < 6);
        CHECK(r.degree_in("y") < 3);

        Polynomial q = random_poly();
        CHECK(splitting_psi(p + q, spec) == r + splitting_psi(q, spec));
        // multiplication by a base class (no factor variables) commutes with psi
        Polynomial base = Int(3) * Polynomial::variable(ctx, "l1") -
                          Polynomial::variable(ctx, "l2");
        CHECK(splitting_psi(base * p, spec) == base * r);
    }

    CHECK_THROWS_AS(AmbientRingSpec(ctx, {AmbientFactor{"x", Int(2) * Polynomial::variable(ctx, "x")}}),
                    NotMonic);
}

TEST_CASE("pushforward to the base") {
    auto ctx = l_context(3, {"x", "y"});
    auto y = Polynomial::variable(ctx, "y");

    CHECK(pushforward_to_base(y * y, "y", 3) == Polynomial::constant(ctx, 1));
    CHECK(pushforward_to_base(Polynomial::constant(ctx, 1), "y", 3).is_zero());
    CHECK_THROWS_AS(pushforward_to_base(y.pow(3), "y", 3), Error);

    // pushing the generating polynomial along the point factor yields alpha_1
    Polynomial q = alpha_generating_poly(3, 3);
    Polynomial a1 = pushforward_to_base(q, "y", 3);
    const auto& cctx = q.context();
    CHECK(a1 == Int(12) * Polynomial::variable(cctx, "x") -
                    Int(12) * Polynomial::variable(cctx, "c1"));

    // module homomorphism over the base: psi-reduced products
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> coeff(-8, 8);
    for (int t = 0; t < 10; ++t) {
        // base class: polynomial in x and l only
        Polynomial base = Polynomial::zero(ctx);
        for (int k = 0; k < 3; ++k) {
            Exps e(ctx->arity());
            e[0] = k;
            e[2] = 1;
            base.add_term(std::move(e), Int(coeff(rng)));
        }
        Polynomial fiber = y * y + Int(3) * y;
        CHECK(pushforward_to_base(base * fiber, "y", 3) ==
              base * pushforward_to_base(fiber, "y", 3));
    }
}
