#pragma once

// Oriented hyperbolic spheres in H^n, with the hyperboloid model
// {u : u_0^2 - |u'|^2 = 1, u_0 > 0} and the Poincare ball model.
//
// A sphere is stored as its hyperboloid center and coth(s) of its radius s,
// signed by orientation: negative coth marks the complement as interior.

#include "descartes/config.hpp"

namespace descartes {

template <Scalar T>
struct HyperboloidPoint {
    Vec<T> u;  // (u_0, ..., u_n)
};

template <Scalar T>
struct BallPoint {
    Vec<T> y;  // |y| < 1
};

template <Scalar T>
struct HyperbolicSphere {
    HyperboloidPoint<T> center;
    T coth_radius;  // |coth s| > 1; sign is the orientation

    /// Unsigned radius s.
    double radius() const;
    std::size_t dimension() const { return center.u.size() - 1; }
};

template <Scalar T>
HyperbolicSphere<T> make_hyperbolic_sphere(HyperboloidPoint<T> center, T coth_radius,
                                           double tol = kDefaultTolerance);

/// Float constructor from a center and a signed radius s (s < 0 flips
/// the orientation).
HyperbolicSphere<double> hyperbolic_sphere_from_radius(HyperboloidPoint<double> center, double signed_radius,
                                                       double tol = kDefaultTolerance);

enum class RowClass { RealSphere, Horocycle, Virtual };
std::string_view to_string(RowClass c);

/// w- = (coth s, u_0 / sinh s, ..., u_n / sinh s), signs following
/// the orientation.
template <Scalar T>
CoordRow<T> hyp_coords(const HyperbolicSphere<T>& s);

/// Inverse of hyp_coords for rows of class RealSphere.
template <Scalar T>
HyperbolicSphere<T> sphere_from_row(const CoordRow<T>& row, double tol = kDefaultTolerance);

/// row1 diag(1,-1,1,...,1) row2^T.
template <Scalar T>
T hyp_pair_product(const CoordRow<T>& a, const CoordRow<T>& b);

/// Checks w diag(1,-1,1,...) w^T = 1 and sorts the row by |coth|:
/// > 1 a sphere, = 1 a horocycle, < 1 a hypersurface at constant distance
/// from a hyperbolic hyperplane (or a circle outside the ball).
template <Scalar T>
RowClass classify_row(const CoordRow<T>& row, double tol = kDefaultTolerance);

/// Linear form G(u) = g0 u_0 - sum g_i u_i - g with g_vec on the
/// two-sheeted hyperboloid (g0^2 - |g'|^2 = 1).
template <Scalar T>
struct HypLinearForm {
    Vec<T> g_vec;
    T g;
};

template <Scalar T>
RowClass classify_linear_form(const HypLinearForm<T>& form, double tol = kDefaultTolerance);

/// The sphere {G(u) > 0} for |g| > 1.  Throws for horocycles and
/// virtual forms.
template <Scalar T>
HyperbolicSphere<T> sphere_from_linear_form(const HypLinearForm<T>& form, double tol = kDefaultTolerance);

/// Row (g, g_vec) / sqrt(g^2 - 1); the w- row of the sphere above.
template <Scalar T>
CoordRow<T> row_from_linear_form(const HypLinearForm<T>& form, double tol = kDefaultTolerance);

template <Scalar T>
HyperboloidPoint<T> ball_to_hyperboloid(const BallPoint<T>& p, double tol = kDefaultTolerance);

template <Scalar T>
BallPoint<T> hyperboloid_to_ball(const HyperboloidPoint<T>& p, double tol = kDefaultTolerance);

/// cosh of the hyperbolic distance; exact in exact mode.
template <Scalar T>
T cosh_distance_hyperboloid(const HyperboloidPoint<T>& a, const HyperboloidPoint<T>& b);

template <Scalar T>
T cosh_distance_ball(const BallPoint<T>& a, const BallPoint<T>& b, double tol = kDefaultTolerance);

template <Scalar T>
double distance_hyperboloid(const HyperboloidPoint<T>& a, const HyperboloidPoint<T>& b);

template <Scalar T>
double distance_ball(const BallPoint<T>& a, const BallPoint<T>& b, double tol = kDefaultTolerance);

/// sum coth^2 - (1/n)(sum coth)^2 - 2; zero for hyperbolic Descartes
/// configurations.
template <Scalar T>
T hyp_soddy_check(const Vec<T>& coth_radii);

/// Float variant taking radii.
double hyp_soddy_check_radii(const Vec<double>& radii);

/// Stacks w- rows of n+2 spheres.
template <Scalar T>
ConfigMatrix<T> config_from_hyperbolic_spheres(const std::vector<HyperbolicSphere<T>>& spheres);

}  // namespace descartes
