#pragma once

// Moving configurations between the plane, the sphere and hyperbolic
// space.  Stereographic projection is from the south pole (-1, 0, ..., 0)
// onto the equatorial hyperplane y_0 = 0.
//
//   W  = W+ G     G  = [[1, 1], [-1, 1]] (+) I
//   W  = W- Gh    Gh = [[-1, 1], [1, 1]] (+) I
//   W- = W+ P     P swaps the first two columns

#include <utility>

#include "descartes/euclid.hpp"
#include "descartes/spherical.hpp"

namespace descartes {

template <Scalar T>
struct ConversionMatrix {
    Geometry from = Geometry::Spherical;
    Geometry to = Geometry::Euclidean;
    Matrix<T> matrix;
};

/// The matrix C with W_to = W_from C, size n+2.
template <Scalar T>
ConversionMatrix<T> conversion_matrix(Geometry from, Geometry to, std::size_t n);

template <Scalar T>
EuclidObject<T> cap_to_plane(const SphericalCap<T>& cap, double tol = kDefaultTolerance);

template <Scalar T>
SphericalCap<T> plane_to_cap(const EuclidObject<T>& obj);

/// Checks the input's Gram identity, then right-multiplies.
template <Scalar T>
ConfigMatrix<T> convert_matrix(const ConfigMatrix<T>& w, Geometry to, double tol = kDefaultTolerance);

template <Scalar T>
CoordRow<T> convert_row(const CoordRow<T>& row, Geometry to);

/// (cot alpha, coth s) = ((b + b_bar)/2, (b - b_bar)/2).
template <Scalar T>
std::pair<T, T> bend_triple(const T& b, const T& b_bar);

}  // namespace descartes
