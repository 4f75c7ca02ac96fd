#include <gtest/gtest.h>

#include "generators.hpp"

using namespace zsr;
using namespace zsr::testing;

namespace {

PolyMatrix constants(const std::vector<std::vector<int>>& grid) {
    std::vector<std::vector<Rational>> g;
    for (const auto& row : grid) {
        g.emplace_back();
        for (int v : row) g.back().emplace_back(v);
    }
    return PolyMatrix::from_constants(g);
}

PolyMatrix case1_output() {
    return mat(3, {{"0", "-x1 + x2", "-x1 + x3"}, {"x1 - x2", "0", "-x2 + x3"}, {"x1 - x3", "x2 - x3", "0"}});
}

} // namespace

TEST(PolyMatrix, MatvecConstantSkew) {
    const PolyMatrix m = constants({{0, 1}, {-1, 0}});
    EXPECT_EQ(matvec(m, PolyVector::identity(2)), vec(2, {"x2", "-x1"}));
}

TEST(PolyMatrix, MatvecElementaryPair) {
    const PolyMatrix a012 = constants({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
    EXPECT_EQ(matvec(a012, PolyVector::identity(3)), vec(3, {"x2", "-x1", "0"}));
    EXPECT_EQ(apply_to_x(a012), vec(3, {"x2", "-x1", "0"}));
}

TEST(PolyMatrix, MatvecZero) {
    EXPECT_TRUE(matvec(PolyMatrix::square(4), PolyVector::identity(4)).is_zero());
}

TEST(PolyMatrix, MatvecDimensionMismatch) {
    try {
        (void)matvec(PolyMatrix::square(3), PolyVector::identity(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(PolyMatrix, SplitSymmetricInput) {
    // Symmetrized third case matrix: the (1,3)/(3,1) entries 0 and 2 average to 1.
    const PolyMatrix h = constants({{0, 2, 0}, {2, 0, 2}, {2, 2, 4}});
    const auto [s, omega] = split_sym_skew(h);
    EXPECT_EQ(s.matrix(), constants({{0, 2, 1}, {2, 0, 2}, {1, 2, 4}}));
    EXPECT_EQ(omega.matrix(), constants({{0, 0, -1}, {0, 0, 0}, {1, 0, 0}}));

    const PolyMatrix sym = constants({{0, 2, 1}, {2, 0, 2}, {1, 2, 4}});
    const auto [s2, o2] = split_sym_skew(sym);
    EXPECT_EQ(s2.matrix(), sym);
    EXPECT_TRUE(o2.is_zero());
}

TEST(PolyMatrix, SplitCase4) {
    const auto [s, omega] = split_sym_skew(constants({{2, -2, 0}, {0, 2, 2}, {2, 0, -2}}));
    EXPECT_EQ(s.matrix(), constants({{2, -1, 1}, {-1, 2, 1}, {1, 1, -2}}));
    EXPECT_EQ(omega.matrix(), constants({{0, -1, -1}, {1, 0, 1}, {1, -1, 0}}));
}

TEST(PolyMatrix, SplitSkewInput) {
    Rng rng(5);
    const SkewPolyMatrix a = random_skew(rng, 3, 2);
    const auto [s, omega] = split_sym_skew(a.matrix());
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(omega, a);
}

TEST(PolyMatrix, SplitNotSquare) {
    try {
        (void)split_sym_skew(PolyMatrix(2, 3, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSquare);
    }
}

TEST(PolyMatrix, SkewCheck) {
    EXPECT_TRUE(skew_check(case1_output()));
    EXPECT_FALSE(skew_check(constants({{1, 0}, {0, 1}})));
    EXPECT_TRUE(skew_check(PolyMatrix::square(3)));
    EXPECT_THROW((void)skew_check(PolyMatrix(2, 3, 3)), Error);
}

TEST(PolyMatrix, SkewWrapperRejects) {
    try {
        SkewPolyMatrix bad(constants({{0, 1}, {1, 0}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSkew);
    }
    EXPECT_THROW(SymPolyMatrix(constants({{0, 1}, {-1, 0}})), Error);
}

TEST(PolyMatrix, Degree) {
    EXPECT_EQ(vec(3, {"-x1^2 + x1*x2 + x1", "-2*x1^2", "-x1^2"}).degree(), 2);
    EXPECT_EQ(constants({{1, 0}, {0, 3}}).degree(), 0);
    EXPECT_EQ(case1_output().degree(), 1);
    EXPECT_EQ(PolyMatrix::square(3).degree(), kZeroDegree);
    EXPECT_EQ(PolyVector(3).degree(), kZeroDegree);
}

// ---- properties ------------------------------------------------------------

TEST(PolyMatrixProperty, SkewFormVanishes) {
    Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const SkewPolyMatrix a = random_skew(rng, n, 3, 9, 0.3);
        ASSERT_TRUE(dot_x(matvec(a.matrix(), PolyVector::identity(n))).is_zero());
    }
}

TEST(PolyMatrixProperty, SplitIsUnique) {
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const PolyMatrix h = random_matrix(rng, n, 2);
        const auto [s, omega] = split_sym_skew(h);
        ASSERT_EQ(s.matrix() + omega.matrix(), h);
        const auto [s2, o2] = split_sym_skew(s.matrix() + omega.matrix());
        ASSERT_EQ(s2, s);
        ASSERT_EQ(o2, omega);
    }
}

TEST(PolyMatrixProperty, MatvecDistributes) {
    Rng rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const PolyMatrix m = random_matrix(rng, n, 2, 5, 0.3);
        const PolyVector u = random_vector(rng, n, 2, 5, 0.3);
        const PolyVector v = random_vector(rng, n, 2, 5, 0.3);
        ASSERT_EQ(matvec(m, u + v), matvec(m, u) + matvec(m, v));
        ASSERT_EQ(matvec(m, PolyVector::identity(n)), apply_to_x(m));
    }
}
