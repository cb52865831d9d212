#include "descartes/hyperbolic.hpp"

#include <cmath>

namespace descartes {

namespace {

template <Scalar T>
T minkowski(const Vec<T>& a, const Vec<T>& b) {
    T acc = a[0] * b[0];
    for (std::size_t k = 1; k < a.size(); ++k) acc -= a[k] * b[k];
    return acc;
}

// 1/sinh(s) from coth(s), carrying the orientation sign of coth.
template <Scalar T>
T signed_csch(const T& coth, double tol) {
    using Tr = ScalarTraits<T>;
    const T sq = coth * coth - T(1);
    if (Tr::sign(sq, tol) <= 0) throw std::domain_error("|coth| must exceed 1 for a hyperbolic sphere");
    T c = Tr::sqrt(sq);
    return Tr::sign(coth, tol) < 0 ? -c : c;
}

double acosh_clamped(double x) { return std::acosh(x < 1.0 ? 1.0 : x); }

}  // namespace

std::string_view to_string(RowClass c) {
    switch (c) {
        case RowClass::RealSphere: return "sphere";
        case RowClass::Horocycle: return "horocycle";
        case RowClass::Virtual: return "virtual";
    }
    return "?";
}

template <Scalar T>
double HyperbolicSphere<T>::radius() const {
    const double c = std::fabs(ScalarTraits<T>::to_double(coth_radius));
    return std::atanh(1.0 / c);
}

template <Scalar T>
HyperbolicSphere<T> make_hyperbolic_sphere(HyperboloidPoint<T> center, T coth_radius, double tol) {
    using Tr = ScalarTraits<T>;
    if (center.u.size() < 3) throw DimensionError("hyperboloid point needs n+1 >= 3 coordinates");
    if (!Tr::is_zero(minkowski(center.u, center.u) - T(1), tol) || Tr::sign(center.u[0], tol) <= 0)
        throw std::invalid_argument("center is not on the upper sheet of the hyperboloid");
    if (Tr::sign(Tr::abs(coth_radius) - T(1), tol) <= 0)
        throw std::invalid_argument("|coth(radius)| must exceed 1");
    return {std::move(center), std::move(coth_radius)};
}

HyperbolicSphere<double> hyperbolic_sphere_from_radius(HyperboloidPoint<double> center, double signed_radius,
                                                       double tol) {
    if (signed_radius == 0.0) throw std::invalid_argument("radius must be nonzero");
    return make_hyperbolic_sphere(std::move(center), 1.0 / std::tanh(signed_radius), tol);
}

template <Scalar T>
CoordRow<T> hyp_coords(const HyperbolicSphere<T>& s) {
    const T csch = signed_csch(s.coth_radius, 0.0);
    CoordRow<T> row;
    row.kind = Geometry::Hyperbolic;
    row.entries.push_back(s.coth_radius);
    for (const auto& u : s.center.u) row.entries.push_back(u * csch);
    return row;
}

template <Scalar T>
T hyp_pair_product(const CoordRow<T>& a, const CoordRow<T>& b) {
    if (a.kind != Geometry::Hyperbolic || b.kind != Geometry::Hyperbolic)
        throw std::invalid_argument("hyp_pair_product needs hyperbolic rows");
    if (a.entries.size() != b.entries.size()) throw DimensionError("hyp_pair_product: row length mismatch");
    T acc = a[0] * b[0] - a[1] * b[1];
    for (std::size_t k = 2; k < a.entries.size(); ++k) acc += a[k] * b[k];
    return acc;
}

template <Scalar T>
RowClass classify_row(const CoordRow<T>& row, double tol) {
    using Tr = ScalarTraits<T>;
    if (row.entries.size() < 4) throw DimensionError("hyperbolic row too short");
    if (!Tr::is_zero(hyp_pair_product(row, row) - T(1), tol))
        throw std::domain_error("row does not satisfy w J~ w^T = 1");
    const int excess = Tr::sign(Tr::abs(row[0]) - T(1), tol);
    // u_0 has the sign of row[1] times the orientation; a center on the
    // lower sheet means the Euclidean picture lies outside the ball.
    const bool upper = Tr::sign(row[1], tol) != 0 && Tr::sign(row[1], tol) == Tr::sign(row[0], tol);
    if (excess > 0 && upper) return RowClass::RealSphere;
    if (excess == 0 && upper) return RowClass::Horocycle;
    return RowClass::Virtual;
}

template <Scalar T>
HyperbolicSphere<T> sphere_from_row(const CoordRow<T>& row, double tol) {
    const RowClass c = classify_row(row, tol);
    if (c != RowClass::RealSphere)
        throw std::domain_error("row describes a " + std::string(to_string(c)) + ", not a hyperbolic sphere");
    const T sinh = T(1) / signed_csch(row[0], tol);
    HyperbolicSphere<T> s;
    s.coth_radius = row[0];
    for (std::size_t k = 1; k < row.entries.size(); ++k) s.center.u.push_back(row[k] * sinh);
    return s;
}

template <Scalar T>
RowClass classify_linear_form(const HypLinearForm<T>& form, double tol) {
    using Tr = ScalarTraits<T>;
    if (!Tr::is_zero(minkowski(form.g_vec, form.g_vec) - T(1), tol))
        throw std::invalid_argument("linear form is not normalized (g0^2 - |g'|^2 != 1)");
    const int excess = Tr::sign(Tr::abs(form.g) - T(1), tol);
    const bool upper = Tr::sign(form.g_vec[0], tol) == Tr::sign(form.g, tol);
    if (excess > 0 && upper) return RowClass::RealSphere;
    if (excess == 0 && upper) return RowClass::Horocycle;
    return RowClass::Virtual;
}

template <Scalar T>
CoordRow<T> row_from_linear_form(const HypLinearForm<T>& form, double tol) {
    const RowClass c = classify_linear_form(form, tol);
    if (c != RowClass::RealSphere)
        throw std::domain_error("linear form cuts out a " + std::string(to_string(c)) + ", not a sphere");
    const T inv = T(1) / ScalarTraits<T>::sqrt(form.g * form.g - T(1));
    CoordRow<T> row;
    row.kind = Geometry::Hyperbolic;
    row.entries.push_back(form.g * inv);
    for (const auto& g : form.g_vec) row.entries.push_back(g * inv);
    return row;
}

template <Scalar T>
HyperbolicSphere<T> sphere_from_linear_form(const HypLinearForm<T>& form, double tol) {
    return sphere_from_row(row_from_linear_form(form, tol), tol);
}

template <Scalar T>
HyperboloidPoint<T> ball_to_hyperboloid(const BallPoint<T>& p, double tol) {
    using Tr = ScalarTraits<T>;
    const T sq = dot(p.y, p.y);
    const T delta = T(1) - sq;
    if (Tr::sign(delta, tol) <= 0) throw std::domain_error("point is not inside the unit ball");
    HyperboloidPoint<T> out;
    out.u.push_back((T(1) + sq) / delta);
    for (const auto& y : p.y) out.u.push_back(T(2) * y / delta);
    return out;
}

template <Scalar T>
BallPoint<T> hyperboloid_to_ball(const HyperboloidPoint<T>& p, double tol) {
    using Tr = ScalarTraits<T>;
    if (!Tr::is_zero(minkowski(p.u, p.u) - T(1), tol) || Tr::sign(p.u[0], tol) <= 0)
        throw std::domain_error("point is not on the upper sheet of the hyperboloid");
    BallPoint<T> out;
    const T denom = T(1) + p.u[0];
    for (std::size_t k = 1; k < p.u.size(); ++k) out.y.push_back(p.u[k] / denom);
    return out;
}

template <Scalar T>
T cosh_distance_hyperboloid(const HyperboloidPoint<T>& a, const HyperboloidPoint<T>& b) {
    if (a.u.size() != b.u.size()) throw DimensionError("points live in different dimensions");
    return minkowski(a.u, b.u);
}

template <Scalar T>
T cosh_distance_ball(const BallPoint<T>& a, const BallPoint<T>& b, double tol) {
    using Tr = ScalarTraits<T>;
    if (a.y.size() != b.y.size()) throw DimensionError("points live in different dimensions");
    Vec<T> diff = a.y;
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= b.y[k];
    const T da = T(1) - dot(a.y, a.y);
    const T db = T(1) - dot(b.y, b.y);
    if (Tr::sign(da, tol) <= 0 || Tr::sign(db, tol) <= 0) throw std::domain_error("point is not inside the unit ball");
    return T(1) + T(2) * dot(diff, diff) / (da * db);
}

template <Scalar T>
double distance_hyperboloid(const HyperboloidPoint<T>& a, const HyperboloidPoint<T>& b) {
    return acosh_clamped(ScalarTraits<T>::to_double(cosh_distance_hyperboloid(a, b)));
}

template <Scalar T>
double distance_ball(const BallPoint<T>& a, const BallPoint<T>& b, double tol) {
    return acosh_clamped(ScalarTraits<T>::to_double(cosh_distance_ball(a, b, tol)));
}

template <Scalar T>
T hyp_soddy_check(const Vec<T>& coth_radii) {
    if (coth_radii.size() < 3) throw DimensionError("need n+2 >= 3 spheres");
    const std::size_t n = coth_radii.size() - 2;
    T sum(0), sum_sq(0);
    for (const auto& c : coth_radii) {
        sum += c;
        sum_sq += c * c;
    }
    return sum_sq - sum * sum / T(static_cast<long>(n)) - T(2);
}

double hyp_soddy_check_radii(const Vec<double>& radii) {
    Vec<double> coths;
    for (double r : radii) {
        if (r == 0.0) throw std::invalid_argument("radius must be nonzero");
        coths.push_back(1.0 / std::tanh(r));
    }
    return hyp_soddy_check(coths);
}

template <Scalar T>
ConfigMatrix<T> config_from_hyperbolic_spheres(const std::vector<HyperbolicSphere<T>>& spheres) {
    if (spheres.size() < 3) throw DimensionError("a configuration needs n+2 >= 3 spheres");
    const std::size_t n = spheres.size() - 2;
    Matrix<T> w(n + 2, n + 2);
    for (std::size_t i = 0; i < spheres.size(); ++i) {
        if (spheres[i].dimension() != n) throw DimensionError("spheres must live in H^" + std::to_string(n));
        w.set_row(i, hyp_coords(spheres[i]).entries);
    }
    return ConfigMatrix<T>(Geometry::Hyperbolic, n, std::move(w));
}

#define DESCARTES_INSTANTIATE(T)                                                                          \
    template struct HyperbolicSphere<T>;                                                                  \
    template HyperbolicSphere<T> make_hyperbolic_sphere<T>(HyperboloidPoint<T>, T, double);               \
    template CoordRow<T> hyp_coords<T>(const HyperbolicSphere<T>&);                                       \
    template HyperbolicSphere<T> sphere_from_row<T>(const CoordRow<T>&, double);                          \
    template T hyp_pair_product<T>(const CoordRow<T>&, const CoordRow<T>&);                               \
    template RowClass classify_row<T>(const CoordRow<T>&, double);                                        \
    template RowClass classify_linear_form<T>(const HypLinearForm<T>&, double);                           \
    template HyperbolicSphere<T> sphere_from_linear_form<T>(const HypLinearForm<T>&, double);             \
    template CoordRow<T> row_from_linear_form<T>(const HypLinearForm<T>&, double);                        \
    template HyperboloidPoint<T> ball_to_hyperboloid<T>(const BallPoint<T>&, double);                     \
    template BallPoint<T> hyperboloid_to_ball<T>(const HyperboloidPoint<T>&, double);                     \
    template T cosh_distance_hyperboloid<T>(const HyperboloidPoint<T>&, const HyperboloidPoint<T>&);      \
    template T cosh_distance_ball<T>(const BallPoint<T>&, const BallPoint<T>&, double);                   \
    template double distance_hyperboloid<T>(const HyperboloidPoint<T>&, const HyperboloidPoint<T>&);      \
    template double distance_ball<T>(const BallPoint<T>&, const BallPoint<T>&, double);                   \
    template T hyp_soddy_check<T>(const Vec<T>&);                                                         \
    template ConfigMatrix<T> config_from_hyperbolic_spheres<T>(const std::vector<HyperbolicSphere<T>>&);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
