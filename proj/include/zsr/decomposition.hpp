#pragma once

// Construction of a skew-symmetric polynomial matrix A(x) with g(x) = A(x)x on the
// hyperplane Σx = 1, for any polynomial g with x⊤g(x) = 0 there.
//
// Pipeline (decompose):
//   ḡ = g − g₀ + g₀·Σx            remove the constant term
//   x⊤ḡ = (1 − Σx)·s              exact division by the simplex form
//   s = x⊤H(x)x, H symmetric      monomial-by-monomial
//   h = Hx − (x⊤Hx)1,  B = Hx1⊤ − 1x⊤H
//   g' = ḡ − h satisfies x⊤g' ≡ 0 on all of ℝⁿ
//   A' from g' by elimination against the vectors v^α_ij = x^{α+e_j}e_i − x^{α+e_i}e_j
//   A = A' + B
//
// Every result carries a certificate: g − A·x = (1 − Σx)·q with zero remainder.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linsolve.hpp"
#include "polymat.hpp"
#include "polynomial.hpp"

namespace zsr {

/// Raised when x⊤g does not vanish on Σx = 1; carries the nonzero remainder.
class HypothesisViolation : public Error {
public:
    HypothesisViolation(ErrorKind kind, const std::string& what, Polynomial witness)
        : Error(kind, what), witness_(std::move(witness)) {}
    const Polynomial& witness() const noexcept { return witness_; }

private:
    Polynomial witness_;
};

/// v^α_ij(x) = x^{α+e_j}e_i − x^{α+e_i}e_j and A^α_ij(x) = x^α(e_i e_j⊤ − e_j e_i⊤), i < j (0-based).
struct BasisElement {
    MultiIndex alpha;
    std::size_t i = 0;
    std::size_t j = 0;

    std::size_t nvars() const { return alpha.size(); }

    PolyVector vector() const {
        const std::size_t n = nvars();
        PolyVector v(n);
        v[i] = Polynomial::monomial(alpha + MultiIndex::unit(n, j));
        v[j] = Polynomial::monomial(alpha + MultiIndex::unit(n, i), Rational(-1));
        return v;
    }

    SkewPolyMatrix matrix() const {
        SkewPolyMatrix a(nvars());
        a.add_pair(i, j, Polynomial::monomial(alpha));
        return a;
    }
};

struct SupportIndices {
    std::vector<std::size_t> zero;    ///< entries identically zero
    std::vector<std::size_t> nonzero; ///< the complement
};

inline SupportIndices support_indices(const PolyVector& g) {
    SupportIndices s;
    for (std::size_t i = 0; i < g.size(); ++i) (g[i].is_zero() ? s.zero : s.nonzero).push_back(i);
    return s;
}

/// True iff x⊤g(x) is the zero polynomial.
inline bool q_membership(const PolyVector& g) { return dot_x(g).is_zero(); }

inline bool is_homogeneous(const PolyVector& g) {
    int deg = kZeroDegree;
    for (const auto& e : g)
        for (const auto& [a, c] : e.terms()) {
            if (deg == kZeroDegree) deg = a.degree();
            if (a.degree() != deg) return false;
        }
    return true;
}

/// For every nonzero entry g_i: no monomial of g_i has all its exponents zero on the
/// other nonzero entries' indices. Must hold for any homogeneous g with x⊤g ≡ 0, so a
/// false return signals an inconsistency; used as a test oracle.
inline bool no_cancel_check(const PolyVector& g) {
    if (!q_membership(g)) throw Error(ErrorKind::PreconditionViolated, "x^T g is not identically zero");
    if (!is_homogeneous(g)) throw Error(ErrorKind::PreconditionViolated, "g is not homogeneous");
    const auto support = support_indices(g);
    for (std::size_t i : support.nonzero) {
        for (const auto& [a, c] : g[i].terms()) {
            bool touches_other = std::any_of(support.nonzero.begin(), support.nonzero.end(),
                                             [&](std::size_t j) { return j != i && a[j] > 0; });
            if (!touches_other) return false;
        }
    }
    return true;
}

/// All v^α_ij with |α| = m − 1 and i < j, ordered by pair (i, j) then α in descending grlex.
inline std::vector<BasisElement> spanning_set(std::size_t n, int m) {
    if (n < 2) throw Error(ErrorKind::InvalidDimension, "spanning set needs n >= 2");
    if (m < 1) throw Error(ErrorKind::InvalidDimension, "spanning set needs degree m >= 1");
    const auto alphas = multi_indices_of_degree(n, m - 1);
    std::vector<BasisElement> out;
    out.reserve(n * (n - 1) / 2 * alphas.size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& a : alphas) out.push_back({a, i, j});
    return out;
}

/// Builds A'(x) skew with A'(x)x = g(x) on ℝⁿ, for g with x⊤g ≡ 0.
///
/// Each homogeneous component is swept independently: entries 0..n−2 in order, and
/// within entry i every monomial x^β (descending grlex) is cancelled with v^α_ij for
/// the smallest j > i having β_j ≥ 1, α = β − e_j. The last entry must end up zero.
inline SkewPolyMatrix algorithm1(const PolyVector& g) {
    const std::size_t n = g.size();
    if (!q_membership(g)) throw Error(ErrorKind::NotInQ, "x^T g is not identically zero");

    SkewPolyMatrix a(n);
    if (n == 0) return a;

    // Homogeneous pieces of the whole vector, keyed by degree.
    std::map<int, PolyVector> components;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [deg, part] : homogeneous_components(g[i])) {
            auto [it, _] = components.try_emplace(deg, n);
            it->second[i] = part;
        }

    for (auto& [deg, work] : components) {
        if (deg == 0) throw Error(ErrorKind::ResidualNonzero, "constant component survived the membership test");
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Polynomial entry = std::exchange(work[i], Polynomial(n));
            for (const auto& [beta, c] : entry.terms()) {
                std::size_t j = i + 1;
                while (j < n && beta[j] == 0) ++j;
                if (j == n)
                    throw Error(ErrorKind::ResidualNonzero,
                                "monomial " + to_string(Polynomial::monomial(beta)) + " of entry " +
                                    std::to_string(i + 1) + " has no later variable to eliminate against");
                const MultiIndex alpha = beta - MultiIndex::unit(n, j);
                work[j].add_term(alpha + MultiIndex::unit(n, i), c);
                a.add_pair(i, j, Polynomial::monomial(alpha, c));
            }
        }
        if (!work[n - 1].is_zero())
            throw Error(ErrorKind::ResidualNonzero, "residual in last entry: " + to_string(work[n - 1]));
    }
    return a;
}

/// Dimension of {g homogeneous of degree m : x⊤g ≡ 0} as the nullity of the
/// coefficient map g ↦ x⊤g, computed by exact elimination.
inline std::size_t kernel_dimension(std::size_t n, int m) {
    if (n == 0 || m < 0) return 0;
    const auto domain = multi_indices_of_degree(n, m);
    const auto image = multi_indices_of_degree(n, m + 1);
    std::map<MultiIndex, std::size_t, GrlexGreater> row_of;
    for (std::size_t r = 0; r < image.size(); ++r) row_of.emplace(image[r], r);

    const std::size_t cols = n * domain.size();
    RationalMatrix mat(image.size(), std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < domain.size(); ++k)
            mat[row_of.at(domain[k] + MultiIndex::unit(n, i))][i * domain.size() + k] = 1;
    return cols - rank(std::move(mat));
}

/// Rank of a family of polynomial vectors over the rationals, via their coefficient vectors.
inline std::size_t coefficient_rank(const std::vector<PolyVector>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<std::map<MultiIndex, std::size_t, GrlexGreater>> slot(vectors.front().size());
    std::size_t cols = 0;
    for (const auto& v : vectors)
        for (std::size_t i = 0; i < v.size(); ++i)
            for (const auto& [a, c] : v[i].terms())
                if (slot[i].try_emplace(a, cols).second) ++cols;
    RationalMatrix mat(vectors.size(), std::vector<Rational>(cols, Rational(0)));
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t i = 0; i < vectors[r].size(); ++i)
            for (const auto& [a, c] : vectors[r][i].terms()) mat[r][slot[i].at(a)] = c;
    return rank(std::move(mat));
}

/// ḡ = (g − g₀) + g₀·Σx: no constant term, and ḡ = g on Σx = 1.
inline PolyVector remove_constant(const PolyVector& g) {
    const std::size_t n = g.size();
    const Polynomial sum = coordinate_sum(n);
    PolyVector out = g;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational c = g[i].constant_term();
        if (c == 0) continue;
        out[i].add_term(MultiIndex(n), -c);
        out[i] += c * sum;
    }
    return out;
}

/// s with x⊤g = (1 − Σx)·s exactly; g must have no constant term.
inline Polynomial factor_hyperplane(const PolyVector& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i].constant_term() != 0)
            throw Error(ErrorKind::HasConstantTerm, "entry " + std::to_string(i + 1) + " has a constant term");
    auto [s, rem] = divide_simplex(dot_x(g));
    if (!rem.is_zero())
        throw HypothesisViolation(ErrorKind::NotVanishingOnH,
                                  "x^T g does not vanish on sum(x) = 1; remainder " + to_string(rem), rem);
    if (s.min_degree() != kZeroDegree && s.min_degree() < 2)
        throw Error(ErrorKind::ResidualNonzero, "cofactor has a constant or linear term");
    return s;
}

/// Symmetric H with x⊤H(x)x = s(x). Per monomial x^α: if some α_i ≥ 2 (smallest such i)
/// use x^{α−2e_i} e_i e_i⊤; otherwise the smallest pair i < j with α_i = α_j = 1 and
/// ½x^{α−e_i−e_j}(e_i e_j⊤ + e_j e_i⊤).
inline SymPolyMatrix symmetrize_scalar(const Polynomial& s) {
    const std::size_t n = s.nvars();
    SymPolyMatrix h(n);
    const Rational half(1, 2);
    for (const auto& [alpha, c] : s.terms()) {
        if (alpha.degree() < 2)
            throw Error(ErrorKind::LowOrderTerm, "monomial of degree " + std::to_string(alpha.degree()));
        std::size_t sq = 0;
        while (sq < n && alpha[sq] < 2) ++sq;
        if (sq < n) {
            const MultiIndex two_ei = MultiIndex::unit(n, sq) + MultiIndex::unit(n, sq);
            h.add_pair(sq, sq, Polynomial::monomial(alpha - two_ei, c));
            continue;
        }
        std::size_t i = 0;
        while (alpha[i] == 0) ++i;
        std::size_t j = i + 1;
        while (alpha[j] == 0) ++j;
        const MultiIndex rest = alpha - MultiIndex::unit(n, i) - MultiIndex::unit(n, j);
        h.add_pair(i, j, Polynomial::monomial(rest, half * c));
    }
    return h;
}

/// h(x) = H(x)x − (x⊤H(x)x)·1.
inline PolyVector build_h(const PolyMatrix& h_mat) {
    h_mat.require_square();
    PolyVector hx = apply_to_x(h_mat);
    const Polynomial quad = dot_x(hx);
    for (std::size_t i = 0; i < hx.size(); ++i) hx[i] -= quad;
    return hx;
}
inline PolyVector build_h(const SymPolyMatrix& h) { return build_h(h.matrix()); }

/// B(x) = H(x)x1⊤ − 1x⊤H(x), skew for symmetric H; B(x)x = h(x) on Σx = 1.
inline SkewPolyMatrix build_B(const SymPolyMatrix& h) {
    const std::size_t n = h.size();
    const PolyVector hx = apply_to_x(h.matrix());
    PolyMatrix b = PolyMatrix::square(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) b(i, j) = hx[i] - hx[j];
    return SkewPolyMatrix(std::move(b));
}
inline SkewPolyMatrix build_B(const PolyMatrix& h) {
    if (!symmetric_check(h)) throw Error(ErrorKind::NotSymmetric, "build_B needs a symmetric matrix");
    return build_B(SymPolyMatrix(h));
}

/// For arbitrary square H: B = build_B(S) + Ω with S, Ω the symmetric and skew parts,
/// so that H(x)x − (x⊤H(x)x)1 = B(x)x on Σx = 1.
inline SkewPolyMatrix strengthened_B(const PolyMatrix& h) {
    auto [sym, skew] = split_sym_skew(h);
    return build_B(sym) + skew;
}

/// Entrywise division of (g − A·x) by 1 − Σx.
struct Certificate {
    PolyVector quotient;
    PolyVector remainder;
    bool holds() const { return remainder.is_zero(); }
};

inline Certificate certify(const PolyVector& g, const PolyMatrix& a) {
    const PolyVector diff = g - apply_to_x(a);
    Certificate cert{PolyVector(g.size()), PolyVector(g.size())};
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [q, r] = divide_simplex(diff[i]);
        cert.quotient[i] = std::move(q);
        cert.remainder[i] = std::move(r);
    }
    return cert;
}

/// True when every entry of v vanishes on the hyperplane Σx = 1.
inline bool vanishes_on_hyperplane(const PolyVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return divide_simplex(p).remainder.is_zero(); });
}

/// deg(m) ≤ bound, with the zero matrix always satisfying it.
inline bool degree_at_most(const PolyMatrix& m, int bound) { return m.is_zero() || m.degree() <= bound; }

struct DecompositionReport {
    PolyVector g;
    PolyVector g_bar;
    Polynomial s;
    SymPolyMatrix H;
    PolyVector h;
    SkewPolyMatrix B;
    PolyVector g_prime;
    SkewPolyMatrix A_prime;
    SkewPolyMatrix A;
    Certificate certificate;
};

/// Skew A with g = A·x on Σx = 1 and deg(A) ≤ deg(g) − 1; exact on ℝⁿ when x⊤g ≡ 0.
inline DecompositionReport decompose(const PolyVector& g) {
    const std::size_t n = g.size();
    {
        auto rem = divide_simplex(dot_x(g)).remainder;
        if (!rem.is_zero())
            throw HypothesisViolation(ErrorKind::HypothesisViolated,
                                      "x^T g does not vanish on sum(x) = 1; remainder " + to_string(rem), rem);
    }
    DecompositionReport rep;
    rep.g = g;
    rep.g_bar = remove_constant(g);
    rep.s = factor_hyperplane(rep.g_bar);
    rep.H = symmetrize_scalar(rep.s);
    rep.h = build_h(rep.H);
    rep.B = build_B(rep.H);
    rep.g_prime = rep.g_bar - rep.h;
    rep.A_prime = algorithm1(rep.g_prime);
    rep.A = rep.A_prime + rep.B;
    rep.certificate = certify(g, rep.A.matrix());

    if (!rep.certificate.holds())
        throw Error(ErrorKind::ResidualNonzero, "certificate remainder is nonzero");
    if (!degree_at_most(rep.A.matrix(), g.degree() - 1))
        throw Error(ErrorKind::ResidualNonzero, "degree bound violated");
    if (n > 0 && q_membership(g) && !rep.certificate.quotient.is_zero())
        throw Error(ErrorKind::ResidualNonzero, "nonzero quotient for a field with x^T g == 0");
    return rep;
}

} // namespace zsr
