#include "descartes/spherical.hpp"

#include <cmath>

#include "descartes/forms.hpp"

namespace descartes {

template <Scalar T>
double SphericalCap<T>::angular_radius() const {
    return std::atan2(1.0, ScalarTraits<T>::to_double(cot_radius));
}

SphericalCap<double> cap_from_angle(Vec<double> center, double alpha, double tol) {
    if (!(alpha > 0.0 && alpha < M_PI)) throw std::invalid_argument("angular radius must lie in (0, pi)");
    return make_cap(std::move(center), std::cos(alpha) / std::sin(alpha), tol);
}

template <Scalar T>
SphericalCap<T> make_cap(Vec<T> center, T cot_radius, double tol) {
    if (center.size() < 2) throw DimensionError("cap center must be an (n+1)-vector with n >= 1");
    if (!ScalarTraits<T>::is_zero(dot(center, center) - T(1), tol))
        throw std::invalid_argument("cap center must be a unit vector");
    return {std::move(center), std::move(cot_radius)};
}

template <Scalar T>
CoordRow<T> cap_coords(const SphericalCap<T>& cap) {
    const T csc = cap.csc_radius();
    CoordRow<T> row;
    row.kind = Geometry::Spherical;
    row.entries.reserve(cap.center.size() + 1);
    row.entries.push_back(cap.cot_radius);
    for (const auto& y : cap.center) row.entries.push_back(y * csc);
    return row;
}

template <Scalar T>
T cap_pair_product(const CoordRow<T>& a, const CoordRow<T>& b) {
    if (a.kind != Geometry::Spherical || b.kind != Geometry::Spherical)
        throw std::invalid_argument("cap_pair_product needs spherical rows");
    if (a.entries.size() != b.entries.size()) throw DimensionError("cap_pair_product: row length mismatch");
    T acc = -(a[0] * b[0]);
    for (std::size_t k = 1; k < a.entries.size(); ++k) acc += a[k] * b[k];
    return acc;
}

template <Scalar T>
SphericalCap<T> cap_from_coords(const CoordRow<T>& row, double tol) {
    if (row.entries.size() < 3) throw DimensionError("spherical row too short");
    if (!ScalarTraits<T>::is_zero(cap_pair_product(row, row) - T(1), tol))
        throw std::domain_error("row is not the w+ vector of a cap (w J w^T != 1)");
    SphericalCap<T> cap;
    cap.cot_radius = row[0];
    const T sin_alpha = T(1) / cap.csc_radius();
    for (std::size_t k = 1; k < row.entries.size(); ++k) cap.center.push_back(row[k] * sin_alpha);
    return cap;
}

template <Scalar T>
SphericalCap<T> cap_from_linear_form(const CapLinearForm<T>& form, double tol) {
    using Tr = ScalarTraits<T>;
    if (!Tr::is_zero(dot(form.f_vec, form.f_vec) - T(1), tol))
        throw std::invalid_argument("linear form is not normalized (|f_vec| != 1)");
    const T sin_sq = T(1) - form.f * form.f;
    if (Tr::sign(sin_sq, tol) <= 0) throw std::domain_error("|f| >= 1: the hyperplane misses or touches the sphere");
    return {form.f_vec, form.f / Tr::sqrt(sin_sq)};
}

template <Scalar T>
SphericalCap<T> complementary_cap(const SphericalCap<T>& cap) {
    SphericalCap<T> out = cap;
    for (auto& y : out.center) y = -y;
    out.cot_radius = -out.cot_radius;
    return out;
}

template <Scalar T>
T spherical_soddy_check(const Vec<T>& cot_radii) {
    if (cot_radii.size() < 3) throw DimensionError("need n+2 >= 3 caps");
    const std::size_t n = cot_radii.size() - 2;
    T sum(0), sum_sq(0);
    for (const auto& c : cot_radii) {
        sum += c;
        sum_sq += c * c;
    }
    return sum_sq - sum * sum / T(static_cast<long>(n)) + T(2);
}

double spherical_soddy_check_angles(const Vec<double>& alphas) {
    Vec<double> cots;
    for (double a : alphas) {
        if (!(a > 0.0 && a < M_PI)) throw std::invalid_argument("angular radius must lie in (0, pi)");
        cots.push_back(std::cos(a) / std::sin(a));
    }
    return spherical_soddy_check(cots);
}

template <Scalar T>
bool antipodal_tangency(const SphericalCap<T>& a, const SphericalCap<T>& b, double tol) {
    using Tr = ScalarTraits<T>;
    if (!Tr::is_zero(a.cot_radius + b.cot_radius, tol)) return false;
    for (std::size_t i = 0; i < a.center.size(); ++i)
        if (!Tr::is_zero(a.center[i] + b.center[i], tol)) return false;
    return true;
}

template <Scalar T>
ConfigMatrix<T> config_from_caps(const std::vector<SphericalCap<T>>& caps, double tol) {
    if (caps.size() < 3) throw DimensionError("a configuration needs n+2 >= 3 caps");
    const std::size_t n = caps.size() - 2;
    Matrix<T> w(n + 2, n + 2);
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (caps[i].dimension() != n) throw DimensionError("caps must live on S^" + std::to_string(n));
        for (std::size_t j = 0; j < i; ++j)
            if (antipodal_tangency(caps[i], caps[j], tol))
                throw std::domain_error("caps " + std::to_string(j) + " and " + std::to_string(i) +
                                        " meet along a great subsphere");
        w.set_row(i, cap_coords(caps[i]).entries);
    }
    return ConfigMatrix<T>(Geometry::Spherical, n, std::move(w));
}

#define DESCARTES_INSTANTIATE(T)                                                                  \
    template struct SphericalCap<T>;                                                              \
    template SphericalCap<T> make_cap<T>(Vec<T>, T, double);                                      \
    template CoordRow<T> cap_coords<T>(const SphericalCap<T>&);                                   \
    template SphericalCap<T> cap_from_coords<T>(const CoordRow<T>&, double);                      \
    template T cap_pair_product<T>(const CoordRow<T>&, const CoordRow<T>&);                       \
    template SphericalCap<T> cap_from_linear_form<T>(const CapLinearForm<T>&, double);            \
    template SphericalCap<T> complementary_cap<T>(const SphericalCap<T>&);                        \
    template T spherical_soddy_check<T>(const Vec<T>&);                                           \
    template bool antipodal_tangency<T>(const SphericalCap<T>&, const SphericalCap<T>&, double);  \
    template ConfigMatrix<T> config_from_caps<T>(const std::vector<SphericalCap<T>>&, double);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
