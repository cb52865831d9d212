#pragma once

// Descartes quadratic form Q_n, the companion matrices used by the three
// geometries, and Gram-identity evaluation  W^T Q W  versus a target.

#include <cstddef>
#include <string_view>

#include "descartes/config.hpp"

namespace descartes {

template <Scalar T>
struct QuadForm {
    std::size_t n = 0;
    Matrix<T> matrix;
};

enum class GramLabel { EuclideanM, EuclideanW, Spherical, Hyperbolic, OneDim };

std::string_view to_string(GramLabel label);

template <Scalar T>
struct GramTarget {
    Matrix<T> matrix;
    GramLabel label = GramLabel::EuclideanW;
};

template <Scalar T>
struct Residual {
    Matrix<T> entrywise;
    T max_abs_entry_error{0};
    bool holds = false;
};

/// Q_n = I - (1/n) 1 1^T, size n+2.
template <Scalar T>
QuadForm<T> descartes_form(std::size_t n);

/// J_n = diag(-1, 1, ..., 1), size n+2.
template <Scalar T>
QuadForm<T> lorentz_like_form(std::size_t n);

/// Q_n^{-1} = I - (1/2) 1 1^T.
template <Scalar T>
Matrix<T> descartes_form_inverse(std::size_t n);

/// Right-hand side of the Gram identity for a geometry:
///   Euclidean  [[0,-4],[-4,0]] (+) 2 I_n
///   spherical  diag(-2, 2, ..., 2)
///   hyperbolic diag(2, -2, 2, ..., 2)
/// For n = 1 the Euclidean target carries the OneDim label.
template <Scalar T>
GramTarget<T> gram_target(Geometry g, std::size_t n);

/// diag(0, 2, ..., 2) of size n+1, the target for the curvature-center
/// matrix M (last n+1 columns of W).
template <Scalar T>
GramTarget<T> euclidean_m_target(std::size_t n);

/// Bilinear form under which each valid row has self-product 1 and two
/// externally tangent rows have product -1:
///   Euclidean  G^{-1} J_n G^{-T} = [[0,-1/2],[-1/2,0]] (+) I_n
///   spherical  J_n
///   hyperbolic diag(1, -1, 1, ..., 1)
template <Scalar T>
Matrix<T> row_form(Geometry g, std::size_t n);

/// W^T Q W.
template <Scalar T>
Matrix<T> gram(const Matrix<T>& w, const QuadForm<T>& q);

/// Residual W^T Q W - T.  `tol` only matters in float mode.
template <Scalar T>
Residual<T> check_identity(const Matrix<T>& w, const QuadForm<T>& q, const GramTarget<T>& target,
                           double tol = kDefaultTolerance);

/// Convenience overload: checks a configuration against its own
/// geometry's target.
template <Scalar T>
Residual<T> check_identity(const ConfigMatrix<T>& cfg, double tol = kDefaultTolerance);

/// Given W A W^T = B with A, B symmetric nonsingular, returns the residual
/// of W^T B^{-1} W - A^{-1}.
template <Scalar T>
Residual<T> inverse_conjugation_check(const Matrix<T>& w, const Matrix<T>& a, const Matrix<T>& b,
                                      double tol = kDefaultTolerance);

template <Scalar T>
Residual<T> make_residual(Matrix<T> diff, double tol);

}  // namespace descartes
