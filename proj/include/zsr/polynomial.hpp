#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// Terms are stored in a map keyed by exponent vector and ordered graded
// lexicographically, largest first, so iteration order is also print order.
// Variables are 0-based internally and print as x1..xn.

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace zsr {

/// Degree reported for the zero polynomial (and all-zero vectors/matrices).
inline constexpr int kZeroDegree = -1;

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    /// The unit multi-index e_i in n variables.
    static MultiIndex unit(std::size_t n, std::size_t i) {
        MultiIndex m(n);
        m.exps_.at(i) = 1;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    int degree() const noexcept {
        return static_cast<int>(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0}));
    }

    bool divisible_by(const MultiIndex& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] < other.exps_[i]) return false;
        return true;
    }

    friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i) a.exps_[i] += b.exps_[i];
        return a;
    }
    /// Caller guarantees divisibility.
    friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i) a.exps_[i] -= b.exps_[i];
        return a;
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Strict weak order: higher total degree first, then lexicographically larger first
/// (x1 > x2 > ... > xn).
struct GrlexGreater {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exponents() > b.exponents();
    }
};

/// Enumerates all multi-indices of total degree `deg` in n variables, in descending grlex order.
inline std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, int deg) {
    std::vector<MultiIndex> out;
    if (n == 0 || deg < 0) return out;
    MultiIndex cur(n);
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos + 1 == n) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (std::int64_t e = left; e >= 0; --e) {
            cur[pos] = static_cast<std::uint32_t>(e);
            self(self, pos + 1, left - static_cast<std::uint32_t>(e));
        }
    };
    rec(rec, 0, static_cast<std::uint32_t>(deg));
    return out;
}

class Polynomial {
public:
    using Terms = std::map<MultiIndex, Rational, GrlexGreater>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : n_(nvars) {}

    static Polynomial constant(std::size_t n, const Rational& c) {
        Polynomial p(n);
        p.add_term(MultiIndex(n), c);
        return p;
    }
    /// x_{i+1} (0-based index i).
    static Polynomial variable(std::size_t n, std::size_t i) {
        if (i >= n) throw Error(ErrorKind::VariableOutOfRange, "variable index out of range");
        Polynomial p(n);
        p.add_term(MultiIndex::unit(n, i), Rational(1));
        return p;
    }
    static Polynomial monomial(const MultiIndex& alpha, const Rational& c = Rational(1)) {
        Polynomial p(alpha.size());
        p.add_term(alpha, c);
        return p;
    }

    std::size_t nvars() const noexcept { return n_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Largest monomial degree; kZeroDegree for the zero polynomial.
    int degree() const { return terms_.empty() ? kZeroDegree : terms_.begin()->first.degree(); }

    /// Smallest monomial degree; kZeroDegree for the zero polynomial.
    int min_degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first.degree(); }

    Rational coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(MultiIndex(n_)); }
    bool is_constant() const { return degree() <= 0; }

    /// Adds c·x^alpha, keeping the canonical form (no stored zeros).
    void add_term(const MultiIndex& alpha, const Rational& c) {
        if (alpha.size() != n_)
            throw Error(ErrorKind::DimensionMismatch, "monomial has " + std::to_string(alpha.size()) +
                                                          " variables, polynomial has " + std::to_string(n_));
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& q) {
        check_same(q);
        for (const auto& [a, c] : q.terms_) add_term(a, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& q) {
        check_same(q);
        for (const auto& [a, c] : q.terms_) add_term(a, -c);
        return *this;
    }
    Polynomial& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [a, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& [a, v] : p.terms_) v = -v;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        p.check_same(q);
        Polynomial r(p.n_);
        for (const auto& [a, c] : p.terms_)
            for (const auto& [b, d] : q.terms_) r.add_term(a + b, c * d);
        return r;
    }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    /// Multiplies by the monomial x^alpha.
    Polynomial shifted(const MultiIndex& alpha) const {
        if (alpha.size() != n_) throw Error(ErrorKind::DimensionMismatch, "monomial dimension");
        Polynomial r(n_);
        for (const auto& [a, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), a + alpha, c);
        return r;
    }

    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.n_ == q.n_ && p.terms_ == q.terms_;
    }

    Rational eval(std::span<const Rational> point) const {
        if (point.size() != n_) throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
        Rational sum = 0;
        for (const auto& [a, c] : terms_) {
            Rational m = c;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::uint32_t k = 0; k < a[i]; ++k) m *= point[i];
            sum += m;
        }
        return sum;
    }

    double eval(std::span<const double> point) const {
        if (point.size() != n_) throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
        double sum = 0.0;
        for (const auto& [a, c] : terms_) {
            double m = c.get_d();
            for (std::size_t i = 0; i < n_; ++i)
                for (std::uint32_t k = 0; k < a[i]; ++k) m *= point[i];
            sum += m;
        }
        return sum;
    }

    void check_same(const Polynomial& q) const {
        if (n_ != q.n_)
            throw Error(ErrorKind::DimensionMismatch,
                        "polynomials in " + std::to_string(n_) + " and " + std::to_string(q.n_) + " variables");
    }

private:
    std::size_t n_ = 0;
    Terms terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

/// Σ x_i.
inline Polynomial coordinate_sum(std::size_t n) {
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i) p.add_term(MultiIndex::unit(n, i), Rational(1));
    return p;
}

/// 1 − Σ x_i, the affine form whose zero set is the hyperplane Σ x_i = 1.
inline Polynomial simplex_form(std::size_t n) {
    return Polynomial::constant(n, Rational(1)) - coordinate_sum(n);
}

/// Splits p by total degree. Component m holds exactly the degree-m terms; the zero
/// polynomial yields an empty map.
inline std::map<int, Polynomial> homogeneous_components(const Polynomial& p) {
    std::map<int, Polynomial> out;
    for (const auto& [a, c] : p.terms()) {
        auto [it, _] = out.try_emplace(a.degree(), p.nvars());
        it->second.add_term(a, c);
    }
    return out;
}

struct SimplexDivision {
    Polynomial quotient;
    Polynomial remainder;
};

/// Division by 1 − Σ x_i, eliminating the pivot variable.
///
/// Writes p = (1 − Σx)·quotient + remainder where the remainder does not involve the
/// pivot variable: it is p with x_pivot := 1 − Σ_{i≠pivot} x_i substituted. Hence the
/// remainder is zero iff p vanishes on the whole hyperplane Σ x_i = 1. Terms are
/// eliminated from the highest power of the pivot downwards.
inline SimplexDivision divide_simplex(const Polynomial& p, std::size_t pivot = 0) {
    const std::size_t n = p.nvars();
    if (n == 0) return {p, Polynomial(0)};
    if (pivot >= n) throw Error(ErrorKind::InvalidArgument, "pivot variable out of range");

    // 1 − Σ_{i≠pivot} x_i; divisor = rest − x_pivot.
    Polynomial rest = Polynomial::constant(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i)
        if (i != pivot) rest.add_term(MultiIndex::unit(n, i), Rational(-1));

    Polynomial work = p;
    Polynomial quotient(n);
    const MultiIndex e_pivot = MultiIndex::unit(n, pivot);
    for (;;) {
        std::uint32_t top = 0;
        for (const auto& [a, c] : work.terms()) top = std::max(top, a[pivot]);
        if (top == 0) break;
        // Gather x_pivot^top · C; replace it by x_pivot^(top-1)·C·rest and record −x_pivot^(top-1)·C.
        Polynomial lowered(n);
        for (const auto& [a, c] : work.terms())
            if (a[pivot] == top) lowered.add_term(a - e_pivot, c);
        for (const auto& [a, c] : lowered.terms()) work.add_term(a + e_pivot, -c);
        work += lowered * rest;
        quotient -= lowered;
    }
    return {std::move(quotient), std::move(work)};
}

/// Renders a polynomial in the textual grammar: `c*x1^a*x2^b` terms joined by ` + ` / ` - `,
/// descending graded-lex order, unit coefficients omitted, rationals as `p/q`.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += 'x' + std::to_string(i + 1);
            if (a[i] > 1) mono += '^' + std::to_string(a[i]);
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + '*' + mono;
        }
    }
    return out;
}

} // namespace zsr
