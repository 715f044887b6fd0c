#include "chow/hnf.hpp"

#include <utility>

namespace chow {

namespace {

struct Echelon {
    IntMatrix H;   // column echelon form, H = A * U
    IntMatrix U;   // unimodular
    std::vector<std::pair<int, int>> pivots;  // (row, col), increasing in both
};

void add_col(IntMatrix& M, int dst, int src, const Int& factor) {
    if (factor == 0) return;
    for (int r = 0; r < M.rows(); ++r) M.at(r, dst) += factor * M.at(r, src);
}

void swap_cols(IntMatrix& M, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < M.rows(); ++r) std::swap(M.at(r, a), M.at(r, b));
}

void negate_col(IntMatrix& M, int c) {
    for (int r = 0; r < M.rows(); ++r) M.at(r, c) = -M.at(r, c);
}

Echelon column_echelon(IntMatrix A) {
    const int m = A.rows(), k = A.cols();
    IntMatrix U(k, k);
    for (int i = 0; i < k; ++i) U.at(i, i) = 1;
    Echelon e{std::move(A), std::move(U), {}};

    int next = 0;  // next pivot column
    for (int r = 0; r < m && next < k; ++r) {
        // gcd elimination across columns next..k-1 in row r
        while (true) {
            int best = -1;
            int nonzero = 0;
            for (int c = next; c < k; ++c) {
                if (e.H.at(r, c) == 0) continue;
                ++nonzero;
                if (best < 0 || chow::abs(e.H.at(r, c)) < chow::abs(e.H.at(r, best))) best = c;
            }
            if (nonzero == 0) { best = -1; }
            if (best < 0) break;
            if (nonzero == 1) {
                swap_cols(e.H, next, best);
                swap_cols(e.U, next, best);
                if (e.H.at(r, next) < 0) {
                    negate_col(e.H, next);
                    negate_col(e.U, next);
                }
                e.pivots.emplace_back(r, next);
                ++next;
                break;
            }
            const Int piv = e.H.at(r, best);
            for (int c = next; c < k; ++c) {
                if (c == best || e.H.at(r, c) == 0) continue;
                Int q = e.H.at(r, c) / piv;  // truncated division still shrinks
                add_col(e.H, c, best, -q);
                add_col(e.U, c, best, -q);
            }
        }
    }
    return e;
}

} // namespace

IntSolveResult solve_integer(const IntMatrix& A, const std::vector<Int>& b) {
    const int m = A.rows(), k = A.cols();
    Echelon e = column_echelon(A);

    IntSolveResult res;
    res.rank = static_cast<int>(e.pivots.size());

    // forward substitution over the echelon columns, row by row
    std::vector<Int> y(k, 0);
    std::size_t pi = 0;
    bool q_solvable = true, z_solvable = true;
    for (int r = 0; r < m; ++r) {
        Int residual = b[r];
        int limit = (pi < e.pivots.size() && e.pivots[pi].first == r) ? e.pivots[pi].second
                                                                       : res.rank;
        for (int c = 0; c < limit; ++c) residual -= e.H.at(r, c) * y[c];
        if (pi < e.pivots.size() && e.pivots[pi].first == r) {
            const int c = e.pivots[pi].second;
            const Int& piv = e.H.at(r, c);
            if (residual % piv != 0) {
                z_solvable = false;  // still consistent over Q, keep scanning for rank
                y[c] = 0;            // placeholder; result discarded
                // rational consistency continues with exact rational value unavailable;
                // fall back to the rational solver for the verdict below.
                res.failure = SolveFailure::divisibility;
                res.augmented_rank = res.rank;
                res.solvable = false;
                // rerun rationally to confirm Q-solvability and ranks
                auto rq = solve_rational(A, b);
                res.augmented_rank = rq.augmented_rank;
                if (!rq.solvable) res.failure = SolveFailure::rank_increase;
                return res;
            }
            y[c] = residual / piv;
            ++pi;
        } else if (residual != 0) {
            q_solvable = false;
            break;
        }
    }
    if (!q_solvable) {
        res.solvable = false;
        res.failure = SolveFailure::rank_increase;
        res.augmented_rank = res.rank + 1;
        return res;
    }
    if (!z_solvable) {
        res.solvable = false;
        res.failure = SolveFailure::divisibility;
        res.augmented_rank = res.rank;
        return res;
    }

    // x = U y
    res.x.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        Int v = 0;
        for (int c = 0; c < res.rank; ++c) v += e.U.at(i, e.pivots[c].second) * y[e.pivots[c].second];
        res.x[i] = std::move(v);
    }
    res.solvable = true;
    res.augmented_rank = res.rank;
    return res;
}

RatSolveResult solve_rational(const IntMatrix& A, const std::vector<Int>& b) {
    const int m = A.rows(), k = A.cols();
    Echelon e = column_echelon(A);

    RatSolveResult res;
    res.rank = static_cast<int>(e.pivots.size());

    std::vector<Rat> y(k, Rat(0));
    std::size_t pi = 0;
    for (int r = 0; r < m; ++r) {
        Rat residual(b[r]);
        int limit = (pi < e.pivots.size() && e.pivots[pi].first == r) ? e.pivots[pi].second
                                                                       : res.rank;
        for (int c = 0; c < limit; ++c) residual -= Rat(e.H.at(r, c)) * y[c];
        if (pi < e.pivots.size() && e.pivots[pi].first == r) {
            const int c = e.pivots[pi].second;
            y[c] = residual / Rat(e.H.at(r, c));
            ++pi;
        } else if (residual != 0) {
            res.solvable = false;
            res.augmented_rank = res.rank + 1;
            return res;
        }
    }
    res.x.assign(k, Rat(0));
    for (int i = 0; i < k; ++i) {
        Rat v(0);
        for (int c = 0; c < res.rank; ++c)
            v += Rat(e.U.at(i, e.pivots[c].second)) * y[e.pivots[c].second];
        res.x[i] = std::move(v);
    }
    res.solvable = true;
    res.augmented_rank = res.rank;
    return res;
}

namespace {

Int mod_inverse(Int a, const Int& p) {
    a %= p;
    if (a < 0) a += p;
    Int r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r0 != 1) throw Error("mod_inverse: " + a.str() + " not invertible mod " + p.str());
    s0 %= p;
    if (s0 < 0) s0 += p;
    return s0;
}

} // namespace

ModSolveResult solve_mod_p(const IntMatrix& A, const std::vector<Int>& b, const Int& p) {
    const int m = A.rows(), k = A.cols();
    auto norm = [&](Int v) {
        v %= p;
        if (v < 0) v += p;
        return v;
    };
    IntMatrix M(m, k + 1);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < k; ++c) M.at(r, c) = norm(A.at(r, c));
        M.at(r, k) = norm(b[r]);
    }

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int c = 0; c < k && row < m; ++c) {
        int sel = -1;
        for (int r = row; r < m; ++r)
            if (M.at(r, c) != 0) { sel = r; break; }
        if (sel < 0) continue;
        for (int cc = 0; cc <= k; ++cc) std::swap(M.at(sel, cc), M.at(row, cc));
        Int inv = mod_inverse(M.at(row, c), p);
        for (int cc = 0; cc <= k; ++cc) M.at(row, cc) = norm(M.at(row, cc) * inv);
        for (int r = 0; r < m; ++r) {
            if (r == row || M.at(r, c) == 0) continue;
            Int f = M.at(r, c);
            for (int cc = 0; cc <= k; ++cc) M.at(r, cc) = norm(M.at(r, cc) - f * M.at(row, cc));
        }
        pivot_col_of_row.push_back(c);
        ++row;
    }

    ModSolveResult res;
    res.rank = row;
    res.augmented_rank = row;
    for (int r = row; r < m; ++r) {
        if (M.at(r, k) != 0) {
            res.augmented_rank = row + 1;
            res.solvable = false;
            return res;
        }
    }
    res.x.assign(k, 0);
    for (int r = 0; r < row; ++r) res.x[pivot_col_of_row[r]] = M.at(r, k);
    res.solvable = true;
    return res;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return f == p;
    return true;
}

} // namespace chow
