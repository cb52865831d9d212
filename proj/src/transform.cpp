#include "descartes/transform.hpp"

#include "descartes/forms.hpp"

namespace descartes {

namespace {

// Matrices taking each geometry's rows to Euclidean augmented rows.
template <Scalar T>
Matrix<T> to_euclidean(Geometry from, std::size_t n) {
    Matrix<T> m = Matrix<T>::identity(n + 2);
    switch (from) {
        case Geometry::Euclidean: break;
        case Geometry::Spherical:
            m(0, 0) = T(1), m(0, 1) = T(1);
            m(1, 0) = T(-1), m(1, 1) = T(1);
            break;
        case Geometry::Hyperbolic:
            m(0, 0) = T(-1), m(0, 1) = T(1);
            m(1, 0) = T(1), m(1, 1) = T(1);
            break;
    }
    return m;
}

// Inverses of the above; both 2x2 blocks square to twice the identity up
// to sign, so the inverse is half of a small integer matrix.
template <Scalar T>
Matrix<T> from_euclidean(Geometry to, std::size_t n) {
    Matrix<T> m = Matrix<T>::identity(n + 2);
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    switch (to) {
        case Geometry::Euclidean: break;
        case Geometry::Spherical:
            m(0, 0) = half, m(0, 1) = -half;
            m(1, 0) = half, m(1, 1) = half;
            break;
        case Geometry::Hyperbolic:
            m(0, 0) = -half, m(0, 1) = half;
            m(1, 0) = half, m(1, 1) = half;
            break;
    }
    return m;
}

}  // namespace

template <Scalar T>
ConversionMatrix<T> conversion_matrix(Geometry from, Geometry to, std::size_t n) {
    if (n < 1) throw DimensionError("dimension must be at least 1");
    ConversionMatrix<T> c{from, to, {}};
    if (from == to) {
        c.matrix = Matrix<T>::identity(n + 2);
    } else if ((from == Geometry::Spherical && to == Geometry::Hyperbolic) ||
               (from == Geometry::Hyperbolic && to == Geometry::Spherical)) {
        Matrix<T> p(n + 2, n + 2);
        p(0, 1) = T(1);
        p(1, 0) = T(1);
        for (std::size_t k = 2; k < n + 2; ++k) p(k, k) = T(1);
        c.matrix = std::move(p);
    } else {
        c.matrix = to_euclidean<T>(from, n) * from_euclidean<T>(to, n);
    }
    return c;
}

template <Scalar T>
EuclidObject<T> cap_to_plane(const SphericalCap<T>& cap, double tol) {
    using Tr = ScalarTraits<T>;
    const T csc = cap.csc_radius();
    const T sin_a = T(1) / csc;
    const T cos_a = cap.cot_radius * sin_a;
    const T denom = cap.center[0] + cos_a;
    const std::size_t n = cap.dimension();
    if (Tr::is_zero(denom, tol)) {
        // Boundary through the south pole: the image is a hyperplane.
        Vec<T> h(n);
        for (std::size_t j = 0; j < n; ++j) h[j] = cap.center[j + 1] * csc;
        return OrientedHyperplane<T>{std::move(h), cap.cot_radius};
    }
    Vec<T> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = cap.center[j + 1] / denom;
    return OrientedSphere<T>{denom / sin_a, std::move(x)};
}

template <Scalar T>
SphericalCap<T> plane_to_cap(const EuclidObject<T>& obj) {
    using Tr = ScalarTraits<T>;
    SphericalCap<T> cap;
    if (const auto* s = std::get_if<OrientedSphere<T>>(&obj)) {
        const T r = s->radius();
        const T c2 = dot(s->center, s->center);
        const T p = T(1) + c2 - r * r;
        T norm = Tr::sqrt(p * p + T(4) * r * r);
        if (Tr::sign(r, 0.0) < 0) norm = -norm;
        cap.center.push_back((T(1) - c2 + r * r) / norm);
        for (const auto& c : s->center) cap.center.push_back(T(2) * c / norm);
        // cot = cos / sin with cos = p / norm and sin = 2 r / norm.
        cap.cot_radius = p / (T(2) * r);
        return cap;
    }
    const auto& h = std::get<OrientedHyperplane<T>>(obj);
    const T norm = Tr::sqrt(T(1) + h.offset * h.offset);
    cap.center.push_back(-h.offset / norm);
    for (const auto& c : h.normal) cap.center.push_back(c / norm);
    cap.cot_radius = h.offset;
    return cap;
}

template <Scalar T>
ConfigMatrix<T> convert_matrix(const ConfigMatrix<T>& w, Geometry to, double tol) {
    const Residual<T> res = check_identity(w, tol);
    if (!res.holds)
        throw std::domain_error("input violates the " + std::string(to_string(w.geometry)) +
                                " Gram identity (max residual " + to_text(res.max_abs_entry_error) + ")");
    const auto c = conversion_matrix<T>(w.geometry, to, w.n);
    return ConfigMatrix<T>(to, w.n, w.w * c.matrix);
}

template <Scalar T>
CoordRow<T> convert_row(const CoordRow<T>& row, Geometry to) {
    const auto c = conversion_matrix<T>(row.kind, to, row.dimension());
    return {row.entries * c.matrix, to};
}

template <Scalar T>
std::pair<T, T> bend_triple(const T& b, const T& b_bar) {
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    return {(b + b_bar) * half, (b - b_bar) * half};
}

#define DESCARTES_INSTANTIATE(T)                                                          \
    template ConversionMatrix<T> conversion_matrix<T>(Geometry, Geometry, std::size_t);   \
    template EuclidObject<T> cap_to_plane<T>(const SphericalCap<T>&, double);             \
    template SphericalCap<T> plane_to_cap<T>(const EuclidObject<T>&);                     \
    template ConfigMatrix<T> convert_matrix<T>(const ConfigMatrix<T>&, Geometry, double); \
    template CoordRow<T> convert_row<T>(const CoordRow<T>&, Geometry);                    \
    template std::pair<T, T> bend_triple<T>(const T&, const T&);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
