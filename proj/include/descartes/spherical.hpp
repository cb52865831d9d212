#pragma once

// Oriented spherical caps on the unit sphere S^n in R^{n+1}.
//
// A cap is stored as its center y (a unit vector) and cot(alpha) of its
// angular radius alpha in (0, pi).  cot(alpha) determines alpha uniquely,
// and keeping it instead of alpha lets exact mode represent every cap
// whose w+ row is exact.

#include "descartes/config.hpp"

namespace descartes {

template <Scalar T>
struct SphericalCap {
    Vec<T> center;  // unit (n+1)-vector
    T cot_radius;   // cot(alpha)

    /// 1/sin(alpha) = sqrt(1 + cot^2), always positive.
    T csc_radius() const { return ScalarTraits<T>::sqrt(T(1) + cot_radius * cot_radius); }
    double angular_radius() const;
    std::size_t dimension() const { return center.size() - 1; }
};

/// Float-mode constructor from an angle in radians.
SphericalCap<double> cap_from_angle(Vec<double> center, double alpha, double tol = kDefaultTolerance);

template <Scalar T>
SphericalCap<T> make_cap(Vec<T> center, T cot_radius, double tol = kDefaultTolerance);

/// Normalized linear form F(y) = f_vec . y - f with |f_vec| = 1, |f| < 1.
template <Scalar T>
struct CapLinearForm {
    Vec<T> f_vec;
    T f;
};

/// w+ = (cot alpha, y_0 / sin alpha, ..., y_n / sin alpha).
template <Scalar T>
CoordRow<T> cap_coords(const SphericalCap<T>& cap);

template <Scalar T>
SphericalCap<T> cap_from_coords(const CoordRow<T>& row, double tol = kDefaultTolerance);

/// row1 J_n row2^T.
template <Scalar T>
T cap_pair_product(const CoordRow<T>& a, const CoordRow<T>& b);

/// The cap {F(y) > 0}: center f_vec, cos(alpha) = f.
template <Scalar T>
SphericalCap<T> cap_from_linear_form(const CapLinearForm<T>& form, double tol = kDefaultTolerance);

template <Scalar T>
SphericalCap<T> complementary_cap(const SphericalCap<T>& cap);

/// sum cot^2 - (1/n)(sum cot)^2 + 2 over n+2 caps; zero for spherical
/// Descartes configurations.
template <Scalar T>
T spherical_soddy_check(const Vec<T>& cot_radii);

/// Angle-valued variant of the above.
double spherical_soddy_check_angles(const Vec<double>& alphas);

/// Antipodal centers with alpha + alpha' = pi: the caps share a whole
/// great subsphere, which is not a point of tangency.
template <Scalar T>
bool antipodal_tangency(const SphericalCap<T>& a, const SphericalCap<T>& b, double tol = kDefaultTolerance);

/// Stacks the w+ rows of n+2 caps.  Rejects antipodal pairs.
template <Scalar T>
ConfigMatrix<T> config_from_caps(const std::vector<SphericalCap<T>>& caps, double tol = kDefaultTolerance);

}  // namespace descartes
