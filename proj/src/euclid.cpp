#include "descartes/euclid.hpp"

#include <algorithm>
#include <numeric>

#include "descartes/completion.hpp"
#include "descartes/forms.hpp"

namespace descartes {
namespace {

// Below this magnitude a float curvature is treated as a hyperplane.
constexpr double kFlatTolerance = 1e-12;

template <Scalar T>
Vec<T> scaled(const Vec<T>& v, const T& s) {
    Vec<T> out = v;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace

template <Scalar T>
OrientedSphere<T> make_sphere(T curvature, Vec<T> center) {
    if (ScalarTraits<T>::is_zero(curvature, 0.0)) throw std::invalid_argument("sphere curvature must be nonzero");
    return {std::move(curvature), std::move(center)};
}

template <Scalar T>
OrientedHyperplane<T> make_hyperplane(Vec<T> normal, T offset, double tol) {
    if (!ScalarTraits<T>::is_zero(dot(normal, normal) - T(1), tol))
        throw std::invalid_argument("hyperplane normal must be a unit vector");
    return {std::move(normal), std::move(offset)};
}

template <Scalar T>
std::size_t dimension_of(const EuclidObject<T>& obj) {
    return std::visit([](const auto& o) { return o.dimension(); }, obj);
}

template <Scalar T>
Vec<T> curvature_center(const EuclidObject<T>& obj) {
    Vec<T> out;
    if (const auto* s = std::get_if<OrientedSphere<T>>(&obj)) {
        out.push_back(s->curvature);
        for (const auto& x : s->center) out.push_back(s->curvature * x);
    } else {
        const auto& h = std::get<OrientedHyperplane<T>>(obj);
        out.push_back(T(0));
        out.insert(out.end(), h.normal.begin(), h.normal.end());
    }
    return out;
}

template <Scalar T>
EuclidObject<T> invert_unit_sphere(const EuclidObject<T>& obj) {
    if (const auto* s = std::get_if<OrientedSphere<T>>(&obj)) {
        const T r = s->radius();
        const T denom = dot(s->center, s->center) - r * r;
        if (ScalarTraits<T>::is_zero(denom, 0.0)) {
            // Sphere through the origin: image is {z : (b x).z = b/2}.
            return OrientedHyperplane<T>{scaled(s->center, s->curvature), s->curvature / T(2)};
        }
        return OrientedSphere<T>{denom / r, scaled(s->center, T(1) / denom)};
    }
    const auto& h = std::get<OrientedHyperplane<T>>(obj);
    if (ScalarTraits<T>::is_zero(h.offset, 0.0)) return h;
    // {h.z = d} maps to the sphere through the origin with center h/(2d).
    const T b = T(2) * h.offset;
    return OrientedSphere<T>{b, scaled(h.normal, T(1) / b)};
}

template <Scalar T>
CoordRow<T> augmented_coords(const EuclidObject<T>& obj) {
    CoordRow<T> row;
    row.kind = Geometry::Euclidean;
    if (const auto* s = std::get_if<OrientedSphere<T>>(&obj)) {
        row.entries.push_back(s->curvature * dot(s->center, s->center) - T(1) / s->curvature);
    } else {
        row.entries.push_back(T(2) * std::get<OrientedHyperplane<T>>(obj).offset);
    }
    Vec<T> m = curvature_center(obj);
    row.entries.insert(row.entries.end(), m.begin(), m.end());
    return row;
}

template <Scalar T>
T pair_product(const CoordRow<T>& a, const CoordRow<T>& b) {
    if (a.kind != Geometry::Euclidean || b.kind != Geometry::Euclidean)
        throw std::invalid_argument("pair_product needs Euclidean augmented rows");
    if (a.entries.size() != b.entries.size() || a.entries.size() < 3)
        throw DimensionError("pair_product: row length mismatch");
    T acc = -(a[0] * b[1] + a[1] * b[0]) / T(2);
    for (std::size_t k = 2; k < a.entries.size(); ++k) acc += a[k] * b[k];
    return acc;
}

template <Scalar T>
EuclidObject<T> object_from_augmented(const CoordRow<T>& row, double tol) {
    using Tr = ScalarTraits<T>;
    if (row.entries.size() < 3) throw DimensionError("augmented row too short");
    if (!Tr::is_zero(pair_product(row, row) - T(1), tol))
        throw InvalidRowError("row does not describe an oriented sphere (self pair product != 1)");
    const T& b_bar = row[0];
    const T& b = row[1];
    Vec<T> tail(row.entries.begin() + 2, row.entries.end());
    if (!Tr::is_zero(b, kFlatTolerance)) return OrientedSphere<T>{b, scaled(tail, T(1) / b)};
    // Hyperplane: the stored tail is its unit normal and b_bar = 2 * offset.
    return OrientedHyperplane<T>{std::move(tail), b_bar / T(2)};
}

template <Scalar T>
T descartes_check(const Vec<T>& bends) {
    if (bends.size() < 3) throw DimensionError("descartes_check needs n+2 >= 3 curvatures");
    return bilinear(bends, descartes_form<T>(bends.size() - 2).matrix, bends);
}

template <Scalar T>
ComplexResiduals<T> complex_descartes_check(const Vec<T>& b, const std::vector<Complex<T>>& z) {
    if (b.size() != 4 || z.size() != 4) throw DimensionError("complex_descartes_check is planar (4 circles)");
    auto mul = [](const Complex<T>& x, const Complex<T>& y) {
        return Complex<T>{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    };
    Complex<T> sum_sq, sum_bz, sum_b_bz;
    T sum_b(0);
    for (std::size_t j = 0; j < 4; ++j) {
        Complex<T> bz{b[j] * z[j].re, b[j] * z[j].im};
        Complex<T> sq = mul(bz, bz);
        sum_sq.re += sq.re;
        sum_sq.im += sq.im;
        sum_bz.re += bz.re;
        sum_bz.im += bz.im;
        sum_b_bz.re += b[j] * bz.re;
        sum_b_bz.im += b[j] * bz.im;
        sum_b += b[j];
    }
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    Complex<T> sq_sum = mul(sum_bz, sum_bz);
    ComplexResiduals<T> out;
    out.centers = {sum_sq.re - half * sq_sum.re, sum_sq.im - half * sq_sum.im};
    out.mixed = {sum_b_bz.re - half * sum_b * sum_bz.re, sum_b_bz.im - half * sum_b * sum_bz.im};
    return out;
}

template <Scalar T>
ConfigMatrix<T> config_from_objects(const std::vector<EuclidObject<T>>& objects) {
    if (objects.size() < 3) throw DimensionError("a configuration needs n+2 >= 3 objects");
    const std::size_t n = objects.size() - 2;
    Matrix<T> w(n + 2, n + 2);
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (dimension_of(objects[i]) != n)
            throw DimensionError("object " + std::to_string(i) + " does not live in R^" + std::to_string(n));
        w.set_row(i, augmented_coords(objects[i]).entries);
    }
    return ConfigMatrix<T>(Geometry::Euclidean, n, std::move(w));
}

template <Scalar T>
std::vector<EuclidObject<T>> objects_from_config(const ConfigMatrix<T>& cfg, double tol) {
    if (cfg.geometry != Geometry::Euclidean) throw std::invalid_argument("objects_from_config needs a Euclidean matrix");
    std::vector<EuclidObject<T>> out;
    for (std::size_t i = 0; i < cfg.size(); ++i) out.push_back(object_from_augmented(cfg.row(i), tol));
    return out;
}

template <Scalar T>
bool externally_tangent(const EuclidObject<T>& a, const EuclidObject<T>& b, double tol) {
    return ScalarTraits<T>::is_zero(pair_product(augmented_coords(a), augmented_coords(b)) + T(1), tol);
}

template <Scalar T>
std::pair<ConfigMatrix<T>, ConfigMatrix<T>> complete_to_descartes(const std::vector<EuclidObject<T>>& given,
                                                                  double tol) {
    if (given.size() < 3) throw DimensionError("complete_to_descartes needs n+1 >= 3 objects");
    const std::size_t n = given.size() - 1;
    std::vector<Vec<T>> rows;
    for (std::size_t i = 0; i < given.size(); ++i) {
        if (dimension_of(given[i]) != n) throw DimensionError("objects must live in R^" + std::to_string(n));
        for (std::size_t j = 0; j < i; ++j)
            if (!externally_tangent(given[i], given[j], tol))
                throw DegenerateConfigurationError("objects " + std::to_string(j) + " and " + std::to_string(i) +
                                                   " are not tangent with compatible orientations");
        rows.push_back(augmented_coords(given[i]).entries);
    }
    auto fourth = complete_rows(row_form<T>(Geometry::Euclidean, n), rows, tol);
    if (fourth.size() != 2) throw DegenerateConfigurationError("expected two completions");
    auto build = [&](const Vec<T>& extra) {
        Matrix<T> w(n + 2, n + 2);
        for (std::size_t i = 0; i < rows.size(); ++i) w.set_row(i, rows[i]);
        w.set_row(n + 1, extra);
        return ConfigMatrix<T>(Geometry::Euclidean, n, std::move(w));
    };
    return {build(fourth[0]), build(fourth[1])};
}

template <Scalar T>
ConfigMatrix<T> realize_curvature_vector(const Vec<T>& bends, double tol) {
    using Tr = ScalarTraits<T>;
    if (bends.size() != 4) throw DimensionError("realize_curvature_vector is planar (4 curvatures)");
    if (std::all_of(bends.begin(), bends.end(), [&](const T& b) { return Tr::is_zero(b, tol); }))
        throw std::invalid_argument("curvature vector is zero");
    if (!Tr::is_zero(descartes_check(bends), tol))
        throw std::invalid_argument("curvature vector does not satisfy the Descartes relation");

    // Fewer than two positive curvatures: realize the reversed orientation
    // and flip every row.
    int positives = 0;
    for (const auto& b : bends) positives += Tr::sign(b, tol) > 0 ? 1 : 0;
    if (positives < 2) {
        Vec<T> flipped = bends;
        for (auto& b : flipped) b = -b;
        ConfigMatrix<T> cfg = realize_curvature_vector(flipped, tol);
        cfg.w *= T(-1);
        return cfg;
    }

    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return bends[i] > bends[j]; });
    const T r1 = T(1) / bends[order[0]];
    const T r2 = T(1) / bends[order[1]];

    std::array<EuclidObject<T>, 4> placed;
    placed[order[0]] = OrientedSphere<T>{bends[order[0]], {-r1, T(0)}};
    placed[order[1]] = OrientedSphere<T>{bends[order[1]], {r2, T(0)}};

    if (Tr::is_zero(bends[order[2]], tol)) {
        // Two zero curvatures force the strip: equal circles between two
        // parallel lines.
        if (!Tr::is_zero(bends[order[3]], tol))
            throw std::invalid_argument("a single line with curvature vector sorted this way is impossible");
        placed[order[2]] = OrientedHyperplane<T>{{T(0), T(1)}, r1};
        placed[order[3]] = OrientedHyperplane<T>{{T(0), T(-1)}, r1};
        std::vector<EuclidObject<T>> objs(placed.begin(), placed.end());
        return config_from_objects(objs);
    }

    const T r3 = T(1) / bends[order[2]];
    const T x = r3 * (r1 - r2) / (r1 + r2);
    const T dx = x + r1;
    const T dist = r1 + r3;
    const T y = Tr::sqrt(dist * dist - dx * dx);
    placed[order[2]] = OrientedSphere<T>{bends[order[2]], {x, y}};

    std::vector<EuclidObject<T>> three{placed[order[0]], placed[order[1]], placed[order[2]]};
    auto [first, second] = complete_to_descartes(three, tol);
    const T target = bends[order[3]];
    const ConfigMatrix<T>* chosen = nullptr;
    if (Tr::is_zero(first.w(3, 1) - target, tol)) {
        chosen = &first;
    } else if (Tr::is_zero(second.w(3, 1) - target, tol)) {
        chosen = &second;
    }
    if (chosen == nullptr) throw DegenerateConfigurationError("no completion has the requested fourth curvature");

    Matrix<T> w(4, 4);
    for (std::size_t k = 0; k < 4; ++k) w.set_row(order[k], chosen->w.row(k));
    return ConfigMatrix<T>(Geometry::Euclidean, 2, std::move(w));
}

template <Scalar T>
EuclidObject<T> transform_object(const EuclidObject<T>& obj, const T& scale, const Matrix<T>& rotation,
                                 const Vec<T>& translation) {
    if (ScalarTraits<T>::sign(scale, 0.0) <= 0) throw std::invalid_argument("similarity scale must be positive");
    const std::size_t n = dimension_of(obj);
    if (rotation.rows() != n || rotation.cols() != n || translation.size() != n)
        throw DimensionError("similarity does not match object dimension");
    auto rotate = [&](const Vec<T>& v) {
        Vec<T> out(n, T(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i] += rotation(i, j) * v[j];
        return out;
    };
    if (const auto* s = std::get_if<OrientedSphere<T>>(&obj)) {
        Vec<T> c = rotate(s->center);
        for (std::size_t i = 0; i < n; ++i) c[i] = scale * c[i] + translation[i];
        return OrientedSphere<T>{s->curvature / scale, std::move(c)};
    }
    const auto& h = std::get<OrientedHyperplane<T>>(obj);
    Vec<T> normal = rotate(h.normal);
    T offset = scale * h.offset + dot(normal, translation);
    return OrientedHyperplane<T>{std::move(normal), std::move(offset)};
}

#define DESCARTES_INSTANTIATE(T)                                                                                  \
    template OrientedSphere<T> make_sphere<T>(T, Vec<T>);                                                         \
    template OrientedHyperplane<T> make_hyperplane<T>(Vec<T>, T, double);                                         \
    template std::size_t dimension_of<T>(const EuclidObject<T>&);                                                 \
    template Vec<T> curvature_center<T>(const EuclidObject<T>&);                                                  \
    template EuclidObject<T> invert_unit_sphere<T>(const EuclidObject<T>&);                                       \
    template CoordRow<T> augmented_coords<T>(const EuclidObject<T>&);                                             \
    template EuclidObject<T> object_from_augmented<T>(const CoordRow<T>&, double);                                \
    template T pair_product<T>(const CoordRow<T>&, const CoordRow<T>&);                                           \
    template T descartes_check<T>(const Vec<T>&);                                                                 \
    template ComplexResiduals<T> complex_descartes_check<T>(const Vec<T>&, const std::vector<Complex<T>>&);      \
    template ConfigMatrix<T> config_from_objects<T>(const std::vector<EuclidObject<T>>&);                         \
    template std::vector<EuclidObject<T>> objects_from_config<T>(const ConfigMatrix<T>&, double);                 \
    template bool externally_tangent<T>(const EuclidObject<T>&, const EuclidObject<T>&, double);                  \
    template std::pair<ConfigMatrix<T>, ConfigMatrix<T>> complete_to_descartes<T>(                              \
        const std::vector<EuclidObject<T>>&, double);                                                             \
    template ConfigMatrix<T> realize_curvature_vector<T>(const Vec<T>&, double);                                  \
    template EuclidObject<T> transform_object<T>(const EuclidObject<T>&, const T&, const Matrix<T>&, const Vec<T>&);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
