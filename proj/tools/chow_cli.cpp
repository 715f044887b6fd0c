// chow: compute alpha and delta classes, emit Chow ring presentations for the
// supported (n, d), and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal exactness diagnostic.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chow/json_io.hpp"
#include "chow/localization.hpp"
#include "chow/presentation.hpp"
#include "chow/render.hpp"
#include "chow/verification.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExactness = 3;

struct CommonOpts {
    std::string format = "text";
    bool unsafe_sizes = false;
    int jobs = 0;
    bool serial = false;
};

void check_sizes(int n, int d, bool unsafe) {
    if (n < 1 || d < 1) throw chow::SizeGuard("n and d must be positive");
    if (!unsafe && (n > 4 || d > 5))
        throw chow::SizeGuard("sizes n <= 4, d <= 5 are enforced by default; pass "
                              "--unsafe-sizes to override");
}

void apply_jobs(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

std::string render_poly(const chow::Polynomial& p, chow::Format f) {
    return f == chow::Format::latex ? chow::latex(p) : p.str();
}

int cmd_alpha(int n, int d, const std::string& var, const CommonOpts& common) {
    check_sizes(n, d, common.unsafe_sizes);
    if (n < 2 || d < 2) throw chow::SizeGuard("alpha classes need n >= 2 and d >= 2");
    auto alphas = chow::alpha_generators(n, d, var);
    auto format = chow::parse_format(common.format);
    if (format == chow::Format::json) {
        json out = {{"schema_version", chow::kSchemaVersion}, {"n", n}, {"d", d}};
        json list = json::array();
        for (std::size_t i = 0; i < alphas.size(); ++i)
            list.push_back({{"name", "alpha" + std::to_string(i + 1)},
                            {"text", alphas[i].str()},
                            {"poly", chow::polynomial_to_json(alphas[i])}});
        out["alphas"] = std::move(list);
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            if (format == chow::Format::latex)
                std::cout << "\\alpha_{" << (i + 1) << "} = " << chow::latex(alphas[i]) << "\n";
            else
                std::cout << "alpha" << (i + 1) << " = " << alphas[i].str() << "\n";
        }
    }
    return kExitOk;
}

int cmd_delta(int n, int d, const std::string& mu_text, const CommonOpts& common) {
    check_sizes(n, d, common.unsafe_sizes);
    chow::Partition mu = chow::Partition::parse(mu_text);
    if (mu.d() != d)
        throw chow::SizeGuard("partition " + mu.str() + " does not sum to d = " +
                              std::to_string(d));
    auto exec = common.serial ? chow::Exec::serial : chow::Exec::parallel;
    chow::Polynomial delta = chow::delta_class(n, d, mu, exec);
    auto format = chow::parse_format(common.format);
    if (format == chow::Format::json) {
        json out = {{"schema_version", chow::kSchemaVersion},
                    {"n", n},
                    {"d", d},
                    {"mu", mu.parts()},
                    {"text", delta.str()},
                    {"poly", chow::polynomial_to_json(delta)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_poly(delta, format) << "\n";
    }
    return kExitOk;
}

int cmd_presentation(int n, int d, const CommonOpts& common) {
    check_sizes(n, d, common.unsafe_sizes);
    chow::Presentation pres = chow::presentation_for(n, d);
    auto format = chow::parse_format(common.format);
    if (format == chow::Format::json) {
        std::cout << chow::presentation_to_json(pres).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "A*(X_{" << n << "," << d << "}) = Z[";
    for (std::size_t i = 0; i < pres.generator_names.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << pres.generator_names[i];
    }
    std::cout << "] / (";
    for (std::size_t i = 0; i < pres.relation_names.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << pres.relation_names[i];
    }
    std::cout << ")\n";
    for (std::size_t i = 0; i < pres.relations.size(); ++i)
        std::cout << "  " << pres.relation_names[i] << " = "
                  << render_poly(pres.relations[i], format) << "\n";
    std::cout << "provenance: " << pres.provenance << "\n";
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& ring_name,
               int modulus, const CommonOpts& common) {
    chow::VerifyOptions opts;
    opts.only = only;
    opts.exec = common.serial ? chow::Exec::serial : chow::Exec::parallel;
    opts.parallel_checks = !common.serial;
    if (modulus > 0) {
        opts.extra_ring = chow::CoefficientRing::Fp(modulus);
    } else if (!ring_name.empty()) {
        if (ring_name == "Z")
            opts.extra_ring = chow::CoefficientRing::Z();
        else if (ring_name == "Q")
            opts.extra_ring = chow::CoefficientRing::Q();
        else
            throw chow::SizeGuard("--ring expects Z or Q (use --modulus p for F_p)");
    }

    chow::VerificationReport report = chow::run_verification(opts);
    auto format = chow::parse_format(common.format);
    if (format == chow::Format::json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"id", c.id},
                              {"criterion", c.criterion},
                              {"tags", c.tags},
                              {"description", c.description},
                              {"status", c.passed ? "pass" : "fail"},
                              {"computed", c.computed},
                              {"expected", c.expected},
                              {"millis", c.millis}});
        json out = {{"schema_version", chow::kSchemaVersion},
                    {"all_passed", report.all_passed()},
                    {"checks", std::move(checks)}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(28)
                      << c.id << " " << c.description << " (" << std::fixed
                      << std::setprecision(1) << c.millis << " ms)\n";
            if (!c.passed) {
                std::cout << "       computed: " << c.computed << "\n";
                std::cout << "       expected: " << c.expected << "\n";
            }
        }
        std::cout << (report.all_passed() ? "all checks passed" : "some checks FAILED") << " ("
                  << report.checks.size() << " checks)\n";
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant intersection computations for stacks of smooth "
                 "hypersurfaces"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--format", common.format, "output format: text, json or latex")
        ->capture_default_str();
    app.add_flag("--unsafe-sizes", common.unsafe_sizes, "lift the default n <= 4, d <= 5 guard");
    app.add_option("--jobs", common.jobs, "number of worker threads (0 = default)");
    app.add_flag("--serial", common.serial, "use the serial reference kernels");

    int n = 3, d = 3;
    std::string var = "h";
    std::string mu_text;
    std::vector<std::string> only;
    std::string ring_name;
    int modulus = 0;

    auto* alpha = app.add_subcommand("alpha", "print the alpha generators of the "
                                              "singular-incidence ideal");
    alpha->add_option("--n", n, "number of variables of the forms")->required();
    alpha->add_option("--d", d, "degree of the forms")->required();
    alpha->add_option("--var", var, "variable used for the hyperplane class")
        ->capture_default_str();

    auto* delta = app.add_subcommand("delta", "print the class of a locus of reducible "
                                              "hypersurfaces");
    delta->add_option("--n", n, "number of variables of the forms")->required();
    delta->add_option("--d", d, "degree of the forms")->required();
    delta->add_option("--mu", mu_text, "degree pattern, e.g. 1,2")->required();

    auto* pres = app.add_subcommand("presentation", "print the Chow ring presentation for a "
                                                    "supported (n, d)");
    pres->add_option("--n", n, "number of variables of the forms")->required();
    pres->add_option("--d", d, "degree of the forms")->required();

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--only", only, "restrict to checks whose id or tag matches");
    verify->add_option("--ring", ring_name, "rerun the membership queries over Z or Q");
    verify->add_option("--modulus", modulus, "rerun the membership queries over F_p");

    for (auto* sub : {alpha, delta, pres, verify}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    apply_jobs(common.jobs);

    try {
        if (app.got_subcommand(alpha)) return cmd_alpha(n, d, var, common);
        if (app.got_subcommand(delta)) return cmd_delta(n, d, mu_text, common);
        if (app.got_subcommand(pres)) return cmd_presentation(n, d, common);
        if (app.got_subcommand(verify)) return cmd_verify(only, ring_name, modulus, common);
    } catch (const chow::ExactnessError& e) {
        std::cerr << "exactness diagnostic: " << e.what() << "\n";
        return kExitExactness;
    } catch (const chow::SizeGuard& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chow::UnsupportedPresentation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const chow::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
