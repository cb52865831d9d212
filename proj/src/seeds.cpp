#include "descartes/seeds.hpp"

#include <cmath>
#include <optional>

#include "descartes/euclid.hpp"
#include "descartes/forms.hpp"
#include "descartes/transform.hpp"

namespace descartes {

namespace {

template <Scalar T>
std::vector<Vec<T>> exact_simplex(std::size_t m) {
    using Tr = ScalarTraits<T>;
    const T zero(0), one(1), two(2);
    switch (m) {
        case 1: return {{zero}, {two}};
        case 2: return {{zero, zero}, {two, zero}, {one, Tr::sqrt(T(3))}};
        case 3: {
            const T h = Tr::sqrt(T(2)) / two;
            return {{h, h, h}, {h, -h, -h}, {-h, h, -h}, {-h, -h, h}};
        }
        case 4: {
            // A regular 5-cell among the vertices of the 120-cell, scaled
            // to edge 2.
            const T r5 = Tr::sqrt(T(5));
            const T phi = (one + r5) / two;
            const T inv = phi - one;
            std::vector<Vec<T>> v = {{-inv, -two, one, phi},
                                     {-phi, zero, inv, -r5},
                                     {r5, -one, -one, -one},
                                     {one, two, phi, inv},
                                     {-one, one, -r5, one}};
            for (auto& row : v)
                for (auto& x : row) x = x / r5;
            return v;
        }
        default: throw FieldError("no exact regular simplex of dimension " + std::to_string(m));
    }
}

// Successive apexes over the centroid of the previous face.
std::vector<Vec<double>> float_simplex(std::size_t m) {
    std::vector<Vec<double>> v(m + 1, Vec<double>(m, 0.0));
    for (std::size_t k = 1; k <= m; ++k) {
        Vec<double> centroid(m, 0.0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j) centroid[j] += v[i][j] / static_cast<double>(k);
        double r2 = 0.0;
        for (std::size_t j = 0; j < m; ++j) r2 += (centroid[j] - v[0][j]) * (centroid[j] - v[0][j]);
        v[k] = centroid;
        v[k][k - 1] = std::sqrt(4.0 - r2);
    }
    return v;
}

// u^T A v for the preserved form.
template <Scalar T>
T form_product(const Matrix<T>& a, const Vec<T>& u, const Vec<T>& v) {
    return bilinear(u, a, v);
}

// I - 2 u u^T A / (u^T A u): the A-orthogonal reflection in u.
template <Scalar T>
Matrix<T> form_reflection(const Matrix<T>& a, const Vec<T>& u) {
    const std::size_t m = u.size();
    const T scale = T(2) / form_product(a, u, u);
    const Vec<T> au = u * a;  // A symmetric
    Matrix<T> l = Matrix<T>::identity(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) l(i, j) -= scale * u[i] * au[j];
    return l;
}

// An A-isometry L with L from = to, or nullopt if neither single
// reflection works (both candidate mirrors are null).
template <Scalar T>
std::optional<Matrix<T>> isometry_taking(const Matrix<T>& a, const Vec<T>& from, const Vec<T>& to, double tol) {
    using Tr = ScalarTraits<T>;
    Vec<T> minus = from, plus = from;
    bool same = true;
    for (std::size_t i = 0; i < from.size(); ++i) {
        minus[i] -= to[i];
        plus[i] += to[i];
        if (!Tr::is_zero(minus[i], tol)) same = false;
    }
    if (same) return Matrix<T>::identity(from.size());
    const T nm = form_product(a, minus, minus);
    const T np = form_product(a, plus, plus);
    const bool use_minus = Tr::abs(nm) >= Tr::abs(np);
    if (use_minus && !Tr::is_zero(nm, tol)) return form_reflection(a, minus);
    if (!use_minus && !Tr::is_zero(np, tol)) return form_reflection(a, plus) * T(-1);
    return std::nullopt;
}

}  // namespace

template <Scalar T>
std::vector<Vec<T>> regular_simplex(std::size_t m) {
    if (m == 0) return {Vec<T>{}};
    if constexpr (ScalarTraits<T>::is_exact) {
        return exact_simplex<T>(m);
    } else {
        if (m <= 4) {
            std::vector<Vec<double>> out;
            for (const auto& row : exact_simplex<Exact>(m)) {
                Vec<double> r;
                for (const auto& x : row) r.push_back(x.to_double());
                out.push_back(std::move(r));
            }
            return out;
        }
        return float_simplex(m);
    }
}

template <Scalar T>
ConfigMatrix<T> figure3_seed() {
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    std::vector<EuclidObject<T>> objs = {
        make_sphere<T>(T(-1), {T(0), T(0)}),
        make_sphere<T>(T(2), {half, T(0)}),
        make_sphere<T>(T(2), {-half, T(0)}),
        make_sphere<T>(T(3), {T(0), ScalarTraits<T>::from_ratio(2, 3)}),
    };
    return config_from_objects(objs);
}

template <Scalar T>
ConfigMatrix<T> strip_seed(std::size_t n) {
    if (n < 2) throw DimensionError("strip seed needs n >= 2");
    std::vector<EuclidObject<T>> objs;
    Vec<T> down(n, T(0)), up(n, T(0));
    down[n - 1] = T(-1);
    up[n - 1] = T(1);
    objs.push_back(OrientedHyperplane<T>{down, T(0)});
    objs.push_back(OrientedHyperplane<T>{up, T(2)});
    for (const auto& c : regular_simplex<T>(n - 1)) {
        Vec<T> center = c;
        center.push_back(T(1));
        objs.push_back(make_sphere<T>(T(1), std::move(center)));
    }
    return config_from_objects(objs);
}

template <Scalar T>
ConfigMatrix<T> canonical_seed(Geometry g, std::size_t n) {
    ConfigMatrix<T> e = n == 2 ? figure3_seed<T>() : strip_seed<T>(n);
    if (g == Geometry::Euclidean) return e;
    return convert_matrix(e, g);
}

template <Scalar T>
ConfigMatrix<T> realize_bends(Geometry g, std::size_t n, const Vec<T>& bends, double tol) {
    using Tr = ScalarTraits<T>;
    if (bends.size() != n + 2) throw DimensionError("expected " + std::to_string(n + 2) + " bends");
    if (g == Geometry::Euclidean && n == 2) return realize_curvature_vector(bends, tol);

    const ConfigMatrix<T> base = canonical_seed<T>(g, n);
    const GramTarget<T> target = gram_target<T>(g, n);
    const QuadForm<T> q = descartes_form<T>(n);
    const std::size_t k = base.bend_column();
    const T lhs = bilinear(bends, q.matrix, bends);
    if (!Tr::is_zero(lhs - target.matrix(k, k), tol))
        throw std::domain_error("bends violate the " + std::string(to_string(g)) + " Descartes relation (b^T Q b = " +
                                to_text(lhs) + ", expected " + to_text(target.matrix(k, k)) + ")");

    // Want W = W0 L with L an isometry of the target form and L e_k = v,
    // so the k-th column of W is W0 v = bends.
    const Matrix<T>& a = target.matrix;
    Vec<T> col(n + 2);
    {
        const Matrix<T> inv = inverse(base.w);
        for (std::size_t i = 0; i < n + 2; ++i) {
            T acc(0);
            for (std::size_t j = 0; j < n + 2; ++j) acc += inv(i, j) * bends[j];
            col[i] = acc;
        }
    }
    Vec<T> e(n + 2, T(0));
    e[k] = T(1);
    std::optional<Matrix<T>> l = isometry_taking(a, e, col, tol);
    if (!l) {
        // Both mirrors null: only possible for the Euclidean form, where
        // e_1 is null.  Route through the other null axis e_0.
        Vec<T> pivot(n + 2, T(0));
        pivot[0] = T(1);
        auto first = isometry_taking(a, e, pivot, tol);
        auto second = isometry_taking(a, pivot, col, tol);
        if (!first || !second) throw std::domain_error("could not realize the bend vector");
        l = *second * *first;
    }
    return ConfigMatrix<T>(g, n, base.w * *l);
}

#define DESCARTES_INSTANTIATE(T)                                                   \
    template std::vector<Vec<T>> regular_simplex<T>(std::size_t);                  \
    template ConfigMatrix<T> figure3_seed<T>();                                    \
    template ConfigMatrix<T> strip_seed<T>(std::size_t);                           \
    template ConfigMatrix<T> canonical_seed<T>(Geometry, std::size_t);             \
    template ConfigMatrix<T> realize_bends<T>(Geometry, std::size_t, const Vec<T>&, double);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
