#pragma once

// Symmetry detection in the torus roots l1..ln and conversion between the
// l-basis and the Chern-class basis, with the sign convention
// c_i = (-1)^i s_i(l1,...,ln). Variables other than the l's (x, y, z, h, t,
// xi_j) pass through conversion as inert scalars.

#include <vector>

#include "chow/polynomial.hpp"

namespace chow {

/// True iff p is fixed by every transposition of adjacent l-variables
/// (l1..ln must all be present in p's context).
bool is_symmetric(const Polynomial& p, int n);

/// Sum of p over all permutations of the named variables (no averaging, so a
/// symmetric p comes back multiplied by the factorial of the orbit size).
Polynomial symmetrize(const Polynomial& p, const std::vector<std::string>& orbit_vars);

/// Rewrite a symmetric polynomial over Z[l1..ln] as a polynomial over
/// Z[c1..cn] with c_i = (-1)^i s_i(l); integer coefficients are preserved
/// (the reduction never divides). Throws NotSymmetric on asymmetric input.
Polynomial to_chern_basis(const Polynomial& p, int n);

/// Inverse direction: substitute c_i -> (-1)^i s_i(l1..ln).
Polynomial expand_chern(const Polynomial& p, int n);

/// i-th elementary symmetric polynomial in the variables l1..ln of ctx.
Polynomial elementary_symmetric(const ContextPtr& ctx, int n, int i);

} // namespace chow
