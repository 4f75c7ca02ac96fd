#pragma once

// Vectors and matrices with polynomial entries, plus the symmetric and
// skew-symmetric wrappers whose invariants are checked on construction.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace zsr {

/// n polynomials in n variables.
class PolyVector {
public:
    PolyVector() = default;
    explicit PolyVector(std::size_t n) : n_(n), entries_(n, Polynomial(n)) {}
    explicit PolyVector(std::vector<Polynomial> entries) : n_(entries.size()), entries_(std::move(entries)) {
        for (const auto& e : entries_)
            if (e.nvars() != n_)
                throw Error(ErrorKind::DimensionMismatch, "vector entry has " + std::to_string(e.nvars()) +
                                                              " variables, expected " + std::to_string(n_));
    }

    /// The identity field x = (x1, ..., xn).
    static PolyVector identity(std::size_t n) {
        PolyVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Polynomial::variable(n, i);
        return v;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return n_; }
    const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
    Polynomial& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
    }
    int degree() const {
        int d = kZeroDegree;
        for (const auto& e : entries_) d = std::max(d, e.degree());
        return d;
    }

    PolyVector& operator+=(const PolyVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < n_; ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    PolyVector& operator-=(const PolyVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < n_; ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
    friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
    friend PolyVector operator*(const Polynomial& s, PolyVector v) {
        for (auto& e : v.entries_) e = s * e;
        return v;
    }
    friend PolyVector operator*(const Rational& s, PolyVector v) {
        for (auto& e : v.entries_) e *= s;
        return v;
    }
    friend bool operator==(const PolyVector&, const PolyVector&) = default;

    void check_same(const PolyVector& o) const {
        if (n_ != o.n_) throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
    }

private:
    std::size_t n_ = 0;
    std::vector<Polynomial> entries_;
};

/// x⊤v.
inline Polynomial dot_x(const PolyVector& v) {
    Polynomial s(v.nvars());
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i].shifted(MultiIndex::unit(v.nvars(), i));
    return s;
}

/// Σ v_i.
inline Polynomial entry_sum(const PolyVector& v) {
    Polynomial s(v.nvars());
    for (const auto& e : v) s += e;
    return s;
}

/// rows × cols grid of polynomials in nvars variables, row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
        : rows_(rows), cols_(cols), n_(nvars), entries_(rows * cols, Polynomial(nvars)) {}

    static PolyMatrix square(std::size_t n) { return PolyMatrix(n, n, n); }

    /// Constant matrix from a rational grid; variables = number of rows.
    static PolyMatrix from_constants(const std::vector<std::vector<Rational>>& grid) {
        const std::size_t n = grid.size();
        PolyMatrix m(n, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (grid[i].size() != n) throw Error(ErrorKind::NotSquare, "constant grid is not square");
            for (std::size_t j = 0; j < n; ++j) m(i, j) = Polynomial::constant(n, grid[i][j]);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nvars() const noexcept { return n_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
    }
    bool is_constant() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_constant(); });
    }
    int degree() const {
        int d = kZeroDegree;
        for (const auto& e : entries_) d = std::max(d, e.degree());
        return d;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(cols_, rows_, n_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    PolyMatrix& operator+=(const PolyMatrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    PolyMatrix& operator-=(const PolyMatrix& o) {
        check_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const Rational& s, PolyMatrix m) {
        for (auto& e : m.entries_) e *= s;
        return m;
    }
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    void check_shape(const PolyMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || n_ != o.n_)
            throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
    }
    void require_square() const {
        if (!is_square())
            throw Error(ErrorKind::NotSquare,
                        "matrix is " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }

private:
    std::size_t rows_ = 0, cols_ = 0, n_ = 0;
    std::vector<Polynomial> entries_;
};

/// M + M⊤ ≡ 0 entrywise.
inline bool skew_check(const PolyMatrix& m) {
    m.require_square();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (!(m(i, j) + m(j, i)).is_zero()) return false;
    return true;
}

inline bool symmetric_check(const PolyMatrix& m) {
    m.require_square();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

/// A square polynomial matrix with A⊤ = −A exactly.
class SkewPolyMatrix {
public:
    SkewPolyMatrix() = default;
    explicit SkewPolyMatrix(std::size_t n) : m_(PolyMatrix::square(n)) {}
    explicit SkewPolyMatrix(PolyMatrix m) : m_(std::move(m)) {
        if (!skew_check(m_)) throw Error(ErrorKind::NotSkew, "matrix is not skew-symmetric");
    }

    const PolyMatrix& matrix() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.rows(); }
    std::size_t nvars() const noexcept { return m_.nvars(); }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    int degree() const { return m_.degree(); }
    bool is_zero() const { return m_.is_zero(); }

    /// Adds c to entry (i, j) and −c to (j, i); i ≠ j.
    void add_pair(std::size_t i, std::size_t j, const Polynomial& c) {
        if (i == j) throw Error(ErrorKind::InvalidArgument, "skew pair on the diagonal");
        m_(i, j) += c;
        m_(j, i) -= c;
    }

    friend SkewPolyMatrix operator+(const SkewPolyMatrix& a, const SkewPolyMatrix& b) {
        SkewPolyMatrix r;
        r.m_ = a.m_ + b.m_;
        return r;
    }
    friend bool operator==(const SkewPolyMatrix&, const SkewPolyMatrix&) = default;

private:
    PolyMatrix m_;
};

/// A square polynomial matrix with H⊤ = H exactly.
class SymPolyMatrix {
public:
    SymPolyMatrix() = default;
    explicit SymPolyMatrix(std::size_t n) : m_(PolyMatrix::square(n)) {}
    explicit SymPolyMatrix(PolyMatrix m) : m_(std::move(m)) {
        if (!symmetric_check(m_)) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
    }

    const PolyMatrix& matrix() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.rows(); }
    std::size_t nvars() const noexcept { return m_.nvars(); }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    int degree() const { return m_.degree(); }
    bool is_zero() const { return m_.is_zero(); }

    /// Adds c to (i, j) and, off the diagonal, to (j, i).
    void add_pair(std::size_t i, std::size_t j, const Polynomial& c) {
        m_(i, j) += c;
        if (i != j) m_(j, i) += c;
    }

    friend bool operator==(const SymPolyMatrix&, const SymPolyMatrix&) = default;

private:
    PolyMatrix m_;
};

/// Exact symbolic product M·v.
inline PolyVector matvec(const PolyMatrix& m, const PolyVector& v) {
    if (m.cols() != v.size() || m.nvars() != v.nvars())
        throw Error(ErrorKind::DimensionMismatch, "matrix columns do not match vector length");
    if (m.rows() != v.size()) throw Error(ErrorKind::DimensionMismatch, "only square products yield a PolyVector");
    PolyVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

/// M·x with x the identity field; cheaper than matvec since it only shifts exponents.
inline PolyVector apply_to_x(const PolyMatrix& m) {
    m.require_square();
    const std::size_t n = m.nvars();
    if (m.rows() != n) throw Error(ErrorKind::DimensionMismatch, "matrix size differs from variable count");
    PolyVector out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!m(i, j).is_zero()) out[i] += m(i, j).shifted(MultiIndex::unit(n, j));
    return out;
}

struct SymSkewSplit {
    SymPolyMatrix sym;
    SkewPolyMatrix skew;
};

/// H = S + Ω with S = (H + H⊤)/2 and Ω = (H − H⊤)/2.
inline SymSkewSplit split_sym_skew(const PolyMatrix& h) {
    h.require_square();
    const PolyMatrix t = h.transpose();
    const Rational half(1, 2);
    return {SymPolyMatrix(half * (h + t)), SkewPolyMatrix(half * (h - t))};
}

} // namespace zsr
