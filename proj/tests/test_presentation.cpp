#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chow/json_io.hpp"
#include "chow/localization.hpp"
#include "chow/presentation.hpp"
#include "chow/render.hpp"
#include "chow/verification.hpp"

using namespace chow;

TEST_CASE("plane cubics presentation") {
    Presentation p = presentation_for(3, 3);
    CHECK(p.generator_names == std::vector<std::string>{"c1", "c2", "c3", "h"});
    REQUIRE(p.relations.size() == 4);
    CHECK(p.relation_names ==
          std::vector<std::string>{"alpha1", "alpha2", "alpha3", "delta2"});

    CHECK(p.relations[0].str() == "12*h - 12*c1");
    CHECK(p.relations[1].str() == "6*h^2 - 4*h*c1 - 6*c2");
    CHECK(p.relations[2].str() == "h^3 - h^2*c1 + h*c2 - 9*c3");
    CHECK(p.relations[3].str() == "21*h^2 - 42*h*c1 + 18*c1^2 + 9*c2");
    for (const auto& r : p.relations) CHECK(r.is_homogeneous());
}

TEST_CASE("lower case presentations") {
    Presentation q = presentation_for(2, 5);
    REQUIRE(q.relations.size() == 2);
    CHECK(q.relations[0].str() == "8*h - 20*c1");
    CHECK(q.relations[1].str() == "h^2 - h*c1 - 15*c2");

    Presentation quadrics = presentation_for(4, 2);
    CHECK(quadrics.relations.size() == 4);
    for (std::size_t i = 0; i < quadrics.relations.size(); ++i)
        CHECK(quadrics.relations[i].weighted_degree() == static_cast<long>(i + 1));
}

TEST_CASE("unsupported sizes are refused with an explanation") {
    CHECK(presentation_supported(3, 3));
    CHECK(presentation_supported(2, 9));
    CHECK(presentation_supported(4, 2));
    CHECK(!presentation_supported(3, 4));
    CHECK(!presentation_supported(4, 3));
    CHECK_THROWS_AS(presentation_for(3, 4), UnsupportedPresentation);
    try {
        presentation_for(3, 4);
    } catch (const UnsupportedPresentation& e) {
        CHECK(std::string(e.what()).find("(3, 4)") != std::string::npos);
    }
}

TEST_CASE("json forms") {
    Presentation p = presentation_for(3, 3);
    auto j = presentation_to_json(p);
    CHECK(j.at("schema_version") == kSchemaVersion);
    CHECK(j.at("n") == 3);
    CHECK(j.at("relations").size() == 4);
    // polynomials round-trip through their json form
    for (const auto& rel : j.at("relations")) {
        Polynomial back = polynomial_from_json(rel.at("poly"));
        CHECK(back.str() == rel.at("text").get<std::string>());
    }

    auto alphas = alpha_generators(3, 3, "h");
    Polynomial d2 = delta_class(3, 3, Partition({1, 2}));
    auto cert = certificate_to_json(slice_membership(d2, alphas, CoefficientRing::Z()));
    CHECK(cert.at("verdict") == "non-member");
    CHECK(cert.at("ring") == "Z");
    CHECK(cert.at("failure") == "divisibility");
    auto cert2 = certificate_to_json(
        slice_membership(Int(2) * d2, alphas, CoefficientRing::Z()));
    CHECK(cert2.at("verdict") == "member");
    CHECK(cert2.at("cofactors")[0] == "5*h - 3*c1");
}

TEST_CASE("latex rendering") {
    auto ctx = c_context(3, {"h"});
    auto h = Polynomial::variable(ctx, "h");
    auto c1 = Polynomial::variable(ctx, "c1");
    auto c2 = Polynomial::variable(ctx, "c2");
    Polynomial d2 = Int(21) * h * h - Int(42) * h * c1 + Int(9) * c2 + Int(18) * c1 * c1;
    CHECK(latex(d2) == "21 h^{2} - 42 h c_{1} + 18 c_{1}^{2} + 9 c_{2}");
    CHECK(latex(Polynomial::zero(ctx)) == "0");

    auto xictx = make_context({"xi2"});
    CHECK(latex(Polynomial::variable(xictx, "xi2")) == "\\xi_{2}");

    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_format("yaml"), Error);
}

TEST_CASE("verification registry") {
    // filters select sensible subsets
    VerifyOptions opts;
    opts.only = {"main-theorem"};
    opts.parallel_checks = false;
    auto report = run_verification(opts);
    CHECK(report.checks.size() >= 7);
    CHECK(report.all_passed());
    bool has_alpha = false, has_torsion = false;
    for (const auto& c : report.checks) {
        if (c.id == "alpha-3-3") has_alpha = true;
        if (c.id == "torsion-delta2-nonmember-z") has_torsion = true;
    }
    CHECK(has_alpha);
    CHECK(has_torsion);

    VerifyOptions none;
    none.only = {"no-such-check"};
    CHECK(run_verification(none).checks.empty());

    auto listed = list_checks();
    CHECK(listed.size() >= 26);
}
