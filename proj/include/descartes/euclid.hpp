#pragma once

// Oriented spheres and hyperplanes in R^n and their (augmented)
// curvature-center coordinates.
//
// Orientation: a sphere with positive curvature has the ball as interior,
// negative curvature the outside.  A hyperplane {x : h.x = d} has the open
// half-space that its unit normal h points into as interior.

#include <array>
#include <utility>
#include <variant>

#include "descartes/config.hpp"

namespace descartes {

template <Scalar T>
struct OrientedSphere {
    T curvature;  // b = 1/r, nonzero
    Vec<T> center;

    T radius() const { return T(1) / curvature; }
    std::size_t dimension() const { return center.size(); }
};

template <Scalar T>
struct OrientedHyperplane {
    Vec<T> normal;  // unit
    T offset;       // plane is {x : normal . x = offset}

    std::size_t dimension() const { return normal.size(); }
};

template <Scalar T>
using EuclidObject = std::variant<OrientedSphere<T>, OrientedHyperplane<T>>;

template <Scalar T>
OrientedSphere<T> make_sphere(T curvature, Vec<T> center);

/// Rejects normals that are not unit length (within `tol` in float mode).
template <Scalar T>
OrientedHyperplane<T> make_hyperplane(Vec<T> normal, T offset, double tol = kDefaultTolerance);

template <Scalar T>
std::size_t dimension_of(const EuclidObject<T>& obj);

/// Curvature-center coordinates (b, b x) or (0, h).
template <Scalar T>
Vec<T> curvature_center(const EuclidObject<T>& obj);

/// Image under x -> x/|x|^2, oriented so that the image of the interior is
/// the interior of the image.
template <Scalar T>
EuclidObject<T> invert_unit_sphere(const EuclidObject<T>& obj);

/// (b_bar, b, b x_1, ..., b x_n), b_bar the curvature of the inverted object.
template <Scalar T>
CoordRow<T> augmented_coords(const EuclidObject<T>& obj);

class InvalidRowError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inverse of augmented_coords.  Rows with b_bar = b = 0 give the hyperplane
/// through the origin with the stored normal.
template <Scalar T>
EuclidObject<T> object_from_augmented(const CoordRow<T>& row, double tol = kDefaultTolerance);

/// -1/2 (w1_0 w2_1 + w1_1 w2_0) + sum_{k>=2} w1_k w2_k.
/// 1 on a valid row with itself, -1 for externally tangent distinct objects.
template <Scalar T>
T pair_product(const CoordRow<T>& a, const CoordRow<T>& b);

/// b^T Q_n b with n = size - 2.
template <Scalar T>
T descartes_check(const Vec<T>& bends);

template <Scalar T>
struct Complex {
    T re{0};
    T im{0};
    friend bool operator==(const Complex&, const Complex&) = default;
};

template <Scalar T>
struct ComplexResiduals {
    Complex<T> centers;        // sum (b z)^2 - 1/2 (sum b z)^2
    Complex<T> mixed;          // sum b (b z) - 1/2 (sum b)(sum b z)
};

/// Planar check of the complex Descartes relations for four circles with
/// curvatures b and centers z (as (x, y) pairs).
template <Scalar T>
ComplexResiduals<T> complex_descartes_check(const Vec<T>& b, const std::vector<Complex<T>>& z);

/// Rows of the given objects stacked into a Euclidean configuration matrix.
template <Scalar T>
ConfigMatrix<T> config_from_objects(const std::vector<EuclidObject<T>>& objects);

template <Scalar T>
std::vector<EuclidObject<T>> objects_from_config(const ConfigMatrix<T>& cfg, double tol = kDefaultTolerance);

/// True when the two objects are externally tangent with compatible
/// orientations (pair product -1).
template <Scalar T>
bool externally_tangent(const EuclidObject<T>& a, const EuclidObject<T>& b, double tol = kDefaultTolerance);

/// The two Descartes configurations containing three mutually tangent
/// oriented circles (or, for general n, n+1 mutually tangent spheres).
template <Scalar T>
std::pair<ConfigMatrix<T>, ConfigMatrix<T>> complete_to_descartes(const std::vector<EuclidObject<T>>& given,
                                                                  double tol = kDefaultTolerance);

/// A planar Descartes configuration with the given oriented curvatures,
/// in canonical position: the two largest-curvature circles tangent at the
/// origin with centers on the x-axis, the third in the upper half-plane.
template <Scalar T>
ConfigMatrix<T> realize_curvature_vector(const Vec<T>& bends, double tol = kDefaultTolerance);

/// x -> scale * R x + t applied to an object.  R must be orthogonal.
template <Scalar T>
EuclidObject<T> transform_object(const EuclidObject<T>& obj, const T& scale, const Matrix<T>& rotation,
                                 const Vec<T>& translation);

}  // namespace descartes
