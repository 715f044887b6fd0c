#pragma once

// The full verification suite: every acceptance identity of the library
// (alpha classes, localization classes, cofactor identities, the torsion
// triple, generator independence, the relation-polynomial membership, the
// factorization identity, pushforward identities, the psi spot check, and
// the property suites), each as an independent pass/fail check. Checks are
// pure and may run concurrently; the report order is stable.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chow/localization.hpp"
#include "chow/membership.hpp"

namespace chow {

struct CheckResult {
    std::string id;
    int criterion = 0;  // 1..12 grouping used by the acceptance runner
    std::vector<std::string> tags;
    std::string description;
    bool passed = false;
    std::string computed;
    std::string expected;
    double millis = 0.0;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    int criterion_count() const;
    bool criterion_passed(int criterion) const;
};

struct VerifyOptions {
    std::vector<std::string> only;  // keep checks whose id or any tag matches one of these
    Exec exec = Exec::parallel;     // execution mode handed to the localization engine
    bool parallel_checks = true;    // run the checks themselves concurrently
    std::optional<CoefficientRing> extra_ring;  // rerun the membership queries in this ring
};

VerificationReport run_verification(const VerifyOptions& opts = {});

/// ids and tags available to `--only` filters.
std::vector<std::pair<std::string, std::vector<std::string>>> list_checks();

} // namespace chow
