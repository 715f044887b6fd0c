#pragma once

// Exact linear solvers for the graded-slice membership problems: column-style
// Hermite reduction over Z (with the unimodular transform tracked, so
// cofactors fall out of the solve), the same echelon reused for rational
// solvability, and Gaussian elimination over F_p.

#include <vector>

#include "chow/numeric.hpp"

namespace chow {

class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

enum class SolveFailure {
    none,
    rank_increase,     // not solvable even over Q
    divisibility,      // solvable over Q but not over Z (torsion)
};

struct IntSolveResult {
    bool solvable = false;
    std::vector<Int> x;       // a solution of A x = b when solvable
    int rank = 0;             // rank of A (over Q)
    int augmented_rank = 0;   // rank of [A | b]
    SolveFailure failure = SolveFailure::none;
};

/// Decide integer solvability of A x = b via column Hermite reduction.
IntSolveResult solve_integer(const IntMatrix& A, const std::vector<Int>& b);

struct RatSolveResult {
    bool solvable = false;
    std::vector<Rat> x;
    int rank = 0;
    int augmented_rank = 0;
};

RatSolveResult solve_rational(const IntMatrix& A, const std::vector<Int>& b);

struct ModSolveResult {
    bool solvable = false;
    std::vector<Int> x;       // representatives in [0, p)
    int rank = 0;
    int augmented_rank = 0;
};

/// Gaussian elimination over F_p (p prime).
ModSolveResult solve_mod_p(const IntMatrix& A, const std::vector<Int>& b, const Int& p);

bool is_prime(const Int& p);

} // namespace chow
