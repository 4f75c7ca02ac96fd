#pragma once

// Payoff-matrix level questions: the map H ↦ replicator field, the constant
// payoffs that induce no motion, the affine skew-symmetric equivalent of a
// constant payoff, and whether a field is induced by some constant payoff.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomposition.hpp"
#include "errors.hpp"
#include "linsolve.hpp"
#include "polymat.hpp"
#include "polynomial.hpp"

namespace zsr {

class PayoffMatrix {
public:
    PayoffMatrix() = default;
    explicit PayoffMatrix(PolyMatrix m) : m_(std::move(m)) {
        m_.require_square();
        if (m_.rows() != m_.nvars())
            throw Error(ErrorKind::DimensionMismatch, "payoff matrix size differs from variable count");
    }
    static PayoffMatrix constant(const std::vector<std::vector<Rational>>& grid) {
        return PayoffMatrix(PolyMatrix::from_constants(grid));
    }

    const PolyMatrix& matrix() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.rows(); }
    bool is_constant() const { return m_.is_constant(); }

    /// Entry (i, j) as a rational; requires a constant matrix.
    Rational value(std::size_t i, std::size_t j) const { return m_(i, j).constant_term(); }

private:
    PolyMatrix m_;
};

/// f(x) = diag(x)(H(x)x − (x⊤H(x)x)·1).
inline PolyVector phi(const PolyMatrix& h) {
    PolyVector bracket = build_h(h);
    const std::size_t n = bracket.size();
    for (std::size_t i = 0; i < n; ++i) bracket[i] = bracket[i].shifted(MultiIndex::unit(n, i));
    return bracket;
}
inline PolyVector phi(const PayoffMatrix& h) { return phi(h.matrix()); }

/// For an affine p with a constant term c, the form p − c·(1 − Σx) (the constant
/// traded for c·Σx) when it has strictly fewer terms; otherwise p unchanged. Both
/// agree on Σx = 1.
inline Polynomial drop_constant_if_sparser(const Polynomial& p) {
    const Rational c = p.constant_term();
    if (p.degree() > 1 || c == 0) return p;
    Polynomial cand = p - c * simplex_form(p.nvars());
    return cand.term_count() < p.term_count() ? cand : p;
}

/// H'(x) = Sx1⊤ − 1x⊤S + Ω for constant H = S + Ω, each entry passed through
/// drop_constant_if_sparser (pairs (i, j) and (j, i) stay negatives of each other).
/// Skew-symmetric, affine, and induces the same replicator field as H on the simplex.
inline SkewPolyMatrix affine_skew_equivalent(const PayoffMatrix& h) {
    if (!h.is_constant()) throw Error(ErrorKind::NotConstant, "affine skew equivalent needs a constant payoff");
    const SkewPolyMatrix raw = strengthened_B(h.matrix());
    const std::size_t n = h.size();
    SkewPolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.add_pair(i, j, drop_constant_if_sparser(raw(i, j)));
    return out;
}

/// H1 − H2 = 1v⊤ for some v, i.e. all rows of the difference coincide.
inline bool nullspace_equivalent(const PayoffMatrix& h1, const PayoffMatrix& h2) {
    if (h1.size() != h2.size()) throw Error(ErrorKind::DimensionMismatch, "payoff sizes differ");
    if (!h1.is_constant() || !h2.is_constant()) throw Error(ErrorKind::NotConstant, "equivalence test needs constant payoffs");
    const std::size_t n = h1.size();
    for (std::size_t j = 0; j < n; ++j) {
        const Rational first = h1.value(0, j) - h2.value(0, j);
        for (std::size_t i = 1; i < n; ++i)
            if (h1.value(i, j) - h2.value(i, j) != first) return false;
    }
    return true;
}

/// One coefficient-matching equation: entry `entry`, coefficient of `monomial`.
struct EquationLabel {
    std::size_t entry = 0;
    MultiIndex monomial;
};

struct Obstruction {
    /// (equation, multiplier) pairs with nonzero multiplier; Σ multiplier·lhs = 0 identically.
    std::vector<std::pair<EquationLabel, Rational>> combination;
    Rational value; ///< Σ multiplier·rhs, nonzero
    std::string describe() const;
};

struct FeasibilityVerdict {
    bool feasible = false;
    std::optional<PayoffMatrix> witness;
    std::optional<Obstruction> obstruction;
};

inline std::string Obstruction::describe() const {
    std::string out;
    for (const auto& [eq, lambda] : combination) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(lambda) + ")*[entry " + std::to_string(eq.entry + 1) + ", coeff of " +
               to_string(Polynomial::monomial(eq.monomial)) + "]";
    }
    return out + " => 0 = " + to_string(value);
}

namespace detail {

/// Restriction to Σx = 1 via x_n := 1 − Σ_{i<n} x_i.
inline Polynomial restrict_last(const Polynomial& p) {
    return p.nvars() == 0 ? p : divide_simplex(p, p.nvars() - 1).remainder;
}

} // namespace detail

/// Decides whether a CONSTANT H satisfies g(x) = Hx − (x⊤Hx)·1 on Σx = 1. Both sides are
/// restricted to the hyperplane by eliminating x_n and the coefficients are matched,
/// giving an exact linear system in the n² entries of H.
inline FeasibilityVerdict constant_representability(const PolyVector& g) {
    const std::size_t n = g.size();
    {
        auto rem = divide_simplex(dot_x(g)).remainder;
        if (!rem.is_zero())
            throw HypothesisViolation(ErrorKind::HypothesisViolated,
                                      "x^T g does not vanish on sum(x) = 1; remainder " + to_string(rem), rem);
    }

    // Column k = (a, b): field contributed by the unit payoff E_ab, restricted.
    std::vector<PolyVector> columns;
    columns.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            PolyMatrix unit = PolyMatrix::square(n);
            unit(a, b) = Polynomial::constant(n, Rational(1));
            PolyVector col = build_h(unit);
            for (std::size_t i = 0; i < n; ++i) col[i] = detail::restrict_last(col[i]);
            columns.push_back(std::move(col));
        }
    PolyVector target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = detail::restrict_last(g[i]);

    // One equation per (entry, monomial) appearing anywhere, ordered by entry then grlex.
    std::vector<EquationLabel> labels;
    std::vector<std::map<MultiIndex, std::size_t, GrlexGreater>> row_of(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& col : columns)
            for (const auto& [mono, c] : col[i].terms()) row_of[i].try_emplace(mono, 0);
        for (const auto& [mono, c] : target[i].terms()) row_of[i].try_emplace(mono, 0);
        for (auto& [mono, idx] : row_of[i]) {
            idx = labels.size();
            labels.push_back({i, mono});
        }
    }

    const std::size_t rows = labels.size();
    RationalMatrix mat(rows, std::vector<Rational>(n * n, Rational(0)));
    std::vector<Rational> rhs(rows, Rational(0));
    for (std::size_t k = 0; k < columns.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [mono, c] : columns[k][i].terms()) mat[row_of[i].at(mono)][k] = c;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [mono, c] : target[i].terms()) rhs[row_of[i].at(mono)] = c;

    const SolveResult sol = solve(mat, rhs);
    FeasibilityVerdict verdict;
    if (sol.feasible()) {
        std::vector<std::vector<Rational>> grid(n, std::vector<Rational>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) grid[a][b] = (*sol.solution)[a * n + b];
        PayoffMatrix witness = PayoffMatrix::constant(grid);
        if (!vanishes_on_hyperplane(build_h(witness.matrix()) - g))
            throw Error(ErrorKind::ResidualNonzero, "representability witness fails re-verification");
        verdict.feasible = true;
        verdict.witness = std::move(witness);
        return verdict;
    }
    Obstruction obs;
    obs.value = sol.obstruction->value;
    for (std::size_t r = 0; r < rows; ++r) {
        const Rational& lambda = sol.obstruction->multipliers[r];
        if (lambda != 0) obs.combination.emplace_back(labels[r], lambda);
    }
    verdict.obstruction = std::move(obs);
    return verdict;
}

} // namespace zsr
