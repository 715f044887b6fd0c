#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chow/classes.hpp"
#include "chow/symmetric.hpp"

using namespace chow;

TEST_CASE("is_symmetric") {
    auto ctx = l_context(3);
    auto l1 = Polynomial::variable(ctx, "l1");
    auto l2 = Polynomial::variable(ctx, "l2");
    auto l3 = Polynomial::variable(ctx, "l3");
    CHECK(is_symmetric(l1 + l2 + l3, 3));
    CHECK(!is_symmetric(l1 - l2, 3));
    CHECK(is_symmetric(l1 * l2 + l1 * l3 + l2 * l3, 3));

    // P_mu(x) is symmetric for every partition, n <= 4, d <= 4
    for (int n = 1; n <= 4; ++n) {
        auto xctx = l_context(n, {"x"});
        for (int d = 1; d <= 4; ++d)
            for (const auto& mu : partitions_of(d))
                CHECK(is_symmetric(partition_class(n, mu, "x", xctx), n));
    }
}

TEST_CASE("symmetrize is the sum over all permutations") {
    auto ctx = l_context(3);
    auto l1 = Polynomial::variable(ctx, "l1");
    auto l2 = Polynomial::variable(ctx, "l2");
    auto l3 = Polynomial::variable(ctx, "l3");

    // a single variable has a 3-element orbit hit twice by the 6 permutations
    CHECK(symmetrize(l1, {"l1", "l2", "l3"}) == Int(2) * (l1 + l2 + l3));

    // a symmetric polynomial is a fixed point: it comes back 3! times
    Polynomial s = l1 * l2 + l1 * l3 + l2 * l3;
    CHECK(symmetrize(s, {"l1", "l2", "l3"}) == Int(6) * s);

    // a monomial with trivial stabilizer spreads into 6 distinct monomials
    auto xictx = make_context({"xi1", "xi2", "xi3"});
    auto xi1 = Polynomial::variable(xictx, "xi1");
    auto xi2 = Polynomial::variable(xictx, "xi2");
    Polynomial spread = symmetrize(xi1 * xi1 * xi2, {"xi1", "xi2", "xi3"});
    CHECK(spread.term_count() == 6);
    for (const auto& [k, c] : spread.terms()) CHECK(c == 1);
}

TEST_CASE("to_chern_basis on the standard examples") {
    auto ctx = l_context(3);
    auto l1 = Polynomial::variable(ctx, "l1");
    auto l2 = Polynomial::variable(ctx, "l2");
    auto l3 = Polynomial::variable(ctx, "l3");

    Polynomial c = to_chern_basis(l1 + l2 + l3, 3);
    CHECK(c == -Polynomial::variable(c.context(), "c1"));

    Polynomial top = to_chern_basis(l1 * l2 * l3, 3);
    CHECK(top == -Polynomial::variable(top.context(), "c3"));

    // P_{1}(x) = (x+l1)(x+l2)(x+l3) -> x^3 - c1 x^2 + c2 x - c3
    auto xctx = l_context(3, {"x"});
    Polynomial p1 = partition_class(3, Partition({1}), "x", xctx);
    Polynomial pc = to_chern_basis(p1, 3);
    const auto& cctx = pc.context();
    auto x = Polynomial::variable(cctx, "x");
    auto c1 = Polynomial::variable(cctx, "c1");
    auto c2 = Polynomial::variable(cctx, "c2");
    auto c3 = Polynomial::variable(cctx, "c3");
    CHECK(pc == x.pow(3) - c1 * x * x + c2 * x - c3);
    CHECK(pc.str() == "x^3 - x^2*c1 + x*c2 - c3");

    CHECK_THROWS_AS(to_chern_basis(l1 - l2, 3), NotSymmetric);
}

TEST_CASE("expand_chern") {
    auto cctx = c_context(3, {"h"});
    auto h = Polynomial::variable(cctx, "h");
    auto c1 = Polynomial::variable(cctx, "c1");

    Polynomial e = expand_chern(c1, 3);
    const auto& lctx = e.context();
    Polynomial sum = Polynomial::variable(lctx, "l1") + Polynomial::variable(lctx, "l2") +
                     Polynomial::variable(lctx, "l3");
    CHECK(e == -sum);

    // alpha1 = 12(h - c1) expands to 12h + 12(l1+l2+l3)
    Polynomial a1 = Int(12) * (h - c1);
    Polynomial ea = expand_chern(a1, 3);
    CHECK(ea == Int(12) * Polynomial::variable(ea.context(), "h") + Int(12) * sum);
}

TEST_CASE("round-trips and ring maps") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(0, 2);
    const int n = 3;
    auto cctx = c_context(n, {"x"});

    for (int t = 0; t < 100; ++t) {
        Polynomial q = Polynomial::zero(cctx);
        for (int term = 0; term < 5; ++term) {
            Exps e(cctx->arity());
            for (auto& v : e) v = expo(rng);
            q.add_term(std::move(e), Int(coeff(rng)));
        }
        Polynomial p = expand_chern(q, n);
        CHECK(is_symmetric(p, n));
        CHECK(to_chern_basis(p, n) == q);                    // expand then convert
        CHECK(expand_chern(to_chern_basis(p, n), n) == p);   // convert then expand
    }

    // Z-linearity and multiplicativity of the conversion
    auto lctx = l_context(n, {"x"});
    std::mt19937_64 rng2(5150);
    auto random_symmetric = [&]() {
        Polynomial q = Polynomial::zero(cctx);
        for (int term = 0; term < 4; ++term) {
            Exps e(cctx->arity());
            for (auto& v : e) v = expo(rng2);
            q.add_term(std::move(e), Int(coeff(rng2)));
        }
        return expand_chern(q, n);
    };
    for (int t = 0; t < 10; ++t) {
        Polynomial a = random_symmetric();
        Polynomial b = random_symmetric();
        CHECK(to_chern_basis(a + b, n) == to_chern_basis(a, n) + to_chern_basis(b, n));
        CHECK(to_chern_basis(a * b, n) == to_chern_basis(a, n) * to_chern_basis(b, n));
    }
    (void)lctx;
}
