#pragma once

// Exact rational Gaussian elimination. Pivots are chosen by position (first
// nonzero entry in the column), never by magnitude; every answer is exact.

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace zsr {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank of a dense rational matrix (rows may be empty).
inline std::size_t rank(RationalMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Evidence that A·y = b has no solution: Σ_k multipliers[k]·row_k(A) = 0 while
/// Σ_k multipliers[k]·b_k = value ≠ 0.
struct Inconsistency {
    std::vector<Rational> multipliers;
    Rational value;
};

struct SolveResult {
    std::optional<std::vector<Rational>> solution; ///< free variables set to zero
    std::optional<Inconsistency> obstruction;
    bool feasible() const { return solution.has_value(); }
};

/// Solves A·y = b exactly. On failure returns the row combination that reduces to 0 = c.
inline SolveResult solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged coefficient matrix");

    RationalMatrix m = a;
    std::vector<Rational> rhs = b;
    // combo[r] expresses the current row r in terms of the original rows.
    RationalMatrix combo(rows, std::vector<Rational>(rows, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) combo[i][i] = 1;

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        std::swap(combo[p], combo[r]);
        const Rational inv = 1 / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
        rhs[r] *= inv;
        for (auto& v : combo[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
            rhs[i] -= f * rhs[r];
            for (std::size_t k = 0; k < rows; ++k) combo[i][k] -= f * combo[r][k];
        }
        pivot_cols.push_back(c);
        ++r;
    }

    SolveResult result;
    for (std::size_t i = r; i < rows; ++i) {
        if (rhs[i] != 0) {
            result.obstruction = Inconsistency{combo[i], rhs[i]};
            return result;
        }
    }
    std::vector<Rational> y(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) y[pivot_cols[i]] = rhs[i];
    result.solution = std::move(y);
    return result;
}

} // namespace zsr
