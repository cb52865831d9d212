#include <gtest/gtest.h>

#include "descartes/spherical.hpp"
#include "support.hpp"

using namespace descartes;
using testing_support::q;
using testing_support::to_matrix;

TEST(DescartesForm, PlanarMatrix) {
    auto q2 = descartes_form<Exact>(2).matrix;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(q2(i, j), i == j ? q(1, 2) : q(-1, 2));
}

TEST(DescartesForm, OneDimensionalMatrix) {
    EXPECT_EQ(descartes_form<Exact>(1).matrix, to_matrix<Exact>({{0, -1, -1}, {-1, 0, -1}, {-1, -1, 0}}));
}

TEST(DescartesForm, RowSums) {
    auto q3 = descartes_form<Exact>(3).matrix;
    for (std::size_t i = 0; i < 5; ++i) {
        Exact s(0);
        for (std::size_t j = 0; j < 5; ++j) s += q3(i, j);
        EXPECT_EQ(s, q(-2, 3));
    }
}

TEST(DescartesForm, InverseIsIMinusHalfOnes) {
    for (std::size_t n = 1; n <= 6; ++n)
        EXPECT_EQ(descartes_form<Exact>(n).matrix * descartes_form_inverse<Exact>(n), Matrix<Exact>::identity(n + 2));
}

TEST(LorentzForm, DiagonalAndInvolution) {
    EXPECT_EQ(lorentz_like_form<Exact>(2).matrix, Matrix<Exact>::diagonal({-1, 1, 1, 1}));
    auto j4 = lorentz_like_form<Exact>(4).matrix;
    EXPECT_EQ(j4 * j4, Matrix<Exact>::identity(6));
    auto j2 = lorentz_like_form<Exact>(2).matrix;
    EXPECT_EQ(inverse(j2), j2);
}

TEST(Gram, IdentityConjugation) {
    auto q2 = descartes_form<Exact>(2);
    EXPECT_EQ(gram(Matrix<Exact>::identity(4), q2), q2.matrix);
}

TEST(Gram, StripConfiguration) {
    auto w = to_matrix<Exact>({{0, 0, 0, -1}, {4, 0, 0, 1}, {0, 1, 0, 1}, {4, 1, 2, 1}});
    EXPECT_EQ(gram(w, descartes_form<Exact>(2)), to_matrix<Exact>({{0, -4, 0, 0}, {-4, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
    auto res = check_identity(w, descartes_form<Exact>(2), gram_target<Exact>(Geometry::Euclidean, 2));
    EXPECT_TRUE(res.holds);
    EXPECT_EQ(res.max_abs_entry_error, Exact(0));
}

TEST(Gram, ZeroColumnGivesZeroRowAndColumn) {
    // W^T Q W: a zero column of W zeroes the matching row and column.
    auto w = to_matrix<Exact>({{1, 0, 5, 1}, {2, 0, 6, 0}, {3, 0, 7, 1}, {4, 0, 8, 0}});
    auto g = gram(w, descartes_form<Exact>(2));
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_EQ(g(1, k), Exact(0));
        EXPECT_EQ(g(k, 1), Exact(0));
    }
}

TEST(Gram, SphericalCapsHitTarget) {
    auto w = canonical_seed<Exact>(Geometry::Spherical, 2);
    auto res = check_identity(w.w, descartes_form<Exact>(2), gram_target<Exact>(Geometry::Spherical, 2));
    EXPECT_TRUE(res.holds);
    EXPECT_EQ(gram_target<Exact>(Geometry::Spherical, 2).matrix, Matrix<Exact>::diagonal({-2, 2, 2, 2}));
}

TEST(Gram, PerturbationIsDetected) {
    auto w = canonical_seed<double>(Geometry::Euclidean, 2);
    w.w(2, 3) += 1e-3;
    auto res = check_identity(w, 1e-9);
    EXPECT_FALSE(res.holds);
    EXPECT_GT(res.max_abs_entry_error, 1e-4);
}

TEST(Gram, TargetsPerGeometry) {
    EXPECT_EQ(gram_target<Exact>(Geometry::Euclidean, 2).matrix,
              to_matrix<Exact>({{0, -4, 0, 0}, {-4, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}));
    EXPECT_EQ(gram_target<Exact>(Geometry::Hyperbolic, 3).matrix, Matrix<Exact>::diagonal({2, -2, 2, 2, 2}));
    EXPECT_EQ(euclidean_m_target<Exact>(2).matrix, Matrix<Exact>::diagonal({0, 2, 2}));
    EXPECT_EQ(gram_target<Exact>(Geometry::Euclidean, 1).label, GramLabel::OneDim);
}

TEST(InverseConjugation, SphericalRows) {
    auto w = canonical_seed<Exact>(Geometry::Spherical, 2).w;
    auto a = lorentz_like_form<Exact>(2).matrix;
    auto b = descartes_form_inverse<Exact>(2) * Exact(2);
    EXPECT_EQ(w * a * w.transpose(), b);
    auto res = inverse_conjugation_check(w, a, b);
    EXPECT_TRUE(res.holds);
    EXPECT_EQ(res.max_abs_entry_error, Exact(0));
}

TEST(InverseConjugation, IdentityMatrix) {
    auto a = to_matrix<Exact>({{2, 1, 0}, {1, 3, 1}, {0, 1, 5}});
    EXPECT_TRUE(inverse_conjugation_check(Matrix<Exact>::identity(3), a, a).holds);
}

TEST(InverseConjugation, RandomFloatMatrix) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix<double> w(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) w(i, j) = u(rng) + (i == j ? 3.0 : 0.0);
    auto a = lorentz_like_form<double>(2).matrix;
    auto b = w * a * w.transpose();
    auto res = inverse_conjugation_check(w, a, b, 1e-9);
    EXPECT_TRUE(res.holds);
    EXPECT_LT(res.max_abs_entry_error, 1e-9);
}

TEST(InverseConjugation, RejectsBadPrecondition) {
    auto a = lorentz_like_form<Exact>(2).matrix;
    EXPECT_THROW(inverse_conjugation_check(Matrix<Exact>::identity(4) * Exact(2), a, a), std::domain_error);
}

TEST(RowForm, SelfAndTangentProducts) {
    auto w = canonical_seed<Exact>(Geometry::Euclidean, 2).w;
    auto k = row_form<Exact>(Geometry::Euclidean, 2);
    auto prod = w * k * w.transpose();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(prod(i, j), i == j ? Exact(1) : Exact(-1));
}
