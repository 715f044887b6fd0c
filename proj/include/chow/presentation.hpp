#pragma once

// Chow ring presentations A*(X_{n,d}) = Z[c1..cn, h] / (relations) for the
// supported cases: plane cubics (n, d) = (3, 3), quadrics d = 2, and binary
// forms n = 2. Other sizes are refused with an explanatory message.

#include <string>
#include <vector>

#include "chow/polynomial.hpp"

namespace chow {

struct Presentation {
    int n = 0, d = 0;
    std::vector<std::string> generator_names;  // c1..cn, h
    std::vector<std::string> relation_names;   // alpha1..alphan (and delta2 for (3,3))
    std::vector<Polynomial> relations;         // homogeneous, in (h, c1..cn)
    std::string provenance;
};

bool presentation_supported(int n, int d);

/// Throws UnsupportedPresentation for sizes outside the known list.
Presentation presentation_for(int n, int d);

} // namespace chow
