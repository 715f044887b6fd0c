#pragma once

// Output formats for the CLI: canonical text, JSON, and LaTeX.

#include <string>

#include "chow/polynomial.hpp"

namespace chow {

enum class Format { text, json, latex };

Format parse_format(const std::string& s);

/// LaTeX rendering of a polynomial: c1 -> c_{1}, xi2 -> \xi_{2}, powers in
/// braces, terms joined with signs.
std::string latex(const Polynomial& p);

} // namespace chow
