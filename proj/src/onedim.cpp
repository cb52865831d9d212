#include "descartes/onedim.hpp"

#include "descartes/forms.hpp"

namespace descartes {

template <Scalar T>
T OrientedInterval<T>::radius() const {
    const T half_length = (hi - lo) / T(2);
    return infinite ? -half_length : half_length;
}

template <Scalar T>
T OrientedInterval<T>::midpoint() const {
    return (lo + hi) / T(2);
}

template <Scalar T>
OrientedInterval<T> make_interval(T lo, T hi) {
    if (!(lo < hi)) throw std::invalid_argument("interval needs lo < hi, got [" + to_text(lo) + ", " + to_text(hi) + "]");
    return {std::move(lo), std::move(hi), false};
}

template <Scalar T>
OrientedInterval<T> make_infinite_interval(T lo, T hi) {
    OrientedInterval<T> out = make_interval(std::move(lo), std::move(hi));
    out.infinite = true;
    return out;
}

template <Scalar T>
Vec<T> OneDimConfig<T>::radii() const {
    Vec<T> r;
    for (const auto& i : intervals) r.push_back(negative ? -i.radius() : i.radius());
    return r;
}

template <Scalar T>
Vec<T> OneDimConfig<T>::curvatures() const {
    Vec<T> a;
    for (const auto& r : radii()) a.push_back(T(1) / r);
    return a;
}

template <Scalar T>
OneDimConfig<T> complete_line(const OrientedInterval<T>& first, const OrientedInterval<T>& second) {
    if (first.infinite || second.infinite) throw std::invalid_argument("complete_line takes two finite intervals");
    const OrientedInterval<T>* left = &first;
    const OrientedInterval<T>* right = &second;
    if (second.lo < first.lo) std::swap(left, right);
    if (left->hi != right->lo)
        throw DegenerateConfigurationError("intervals [" + to_text(first.lo) + ", " + to_text(first.hi) + "] and [" +
                                           to_text(second.lo) + ", " + to_text(second.hi) +
                                           "] do not touch at a single endpoint");
    OneDimConfig<T> c;
    c.intervals = {first, second, make_infinite_interval(left->lo, right->hi)};
    c.w = augmented_1d(c);
    return c;
}

template <Scalar T>
T descartes_1d_check(const Vec<T>& a) {
    if (a.size() != 3) throw DimensionError("descartes_1d_check takes 3 curvatures");
    T sq(0), sum(0);
    for (const auto& x : a) {
        sq += x * x;
        sum += x;
    }
    return sq - sum * sum;
}

template <Scalar T>
Vec<T> interval_row(const OrientedInterval<T>& iv) {
    if (iv.infinite) throw std::invalid_argument("interval_row takes a finite interval");
    const T r = iv.radius();
    const T x = iv.midpoint();
    return {x * x / r - r, T(1) / r, x / r};
}

template <Scalar T>
T reflection_shift(const OrientedInterval<T>& iv) {
    if (iv.lo < T(0) && T(0) < iv.hi) return T(0);
    return -iv.midpoint();
}

template <Scalar T>
Vec<T> infinite_interval_row(const OrientedInterval<T>& iv) {
    if (!iv.infinite) throw std::invalid_argument("infinite_interval_row takes the infinite interval");
    const T s = reflection_shift(iv);
    const T lo = iv.lo + s;
    const T hi = iv.hi + s;
    // 0 is now inside (lo, hi), so x -> 1/x sends the infinite interval to
    // the finite [1/lo, 1/hi], and sends the inversion image back to the
    // complement: b_bar is the reflected curvature.
    const OrientedInterval<T> image = make_interval(T(1) / lo, T(1) / hi);
    const T b = T(1) / iv.radius();
    const T bx = image.curvature() * image.midpoint();
    const T b_bar = image.curvature();
    // Undo the translation: x -> x - s.
    return {b_bar - T(2) * s * bx + s * s * b, b, bx - s * b};
}

template <Scalar T>
Matrix<T> augmented_1d(const OneDimConfig<T>& c) {
    Matrix<T> w(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Vec<T> row = c.intervals[i].infinite ? infinite_interval_row(c.intervals[i]) : interval_row(c.intervals[i]);
        if (c.negative)
            for (auto& x : row) x = -x;
        w.set_row(i, row);
    }
    return w;
}

template <Scalar T>
OneDimConfig<T> reversed(const OneDimConfig<T>& c) {
    OneDimConfig<T> out = c;
    out.negative = !c.negative;
    out.w = c.w * T(-1);
    return out;
}

template <Scalar T>
OneDimConfig<T> config_from_augmented_1d(const Matrix<T>& w, double tol) {
    if (w.rows() != 3 || w.cols() != 3) throw DimensionError("one-dimensional configurations are 3x3, got " + w.shape());
    const Residual<T> res = check_identity(w, descartes_form<T>(1), gram_target<T>(Geometry::Euclidean, 1), tol);
    if (!res.holds)
        throw std::domain_error("matrix violates the one-dimensional Gram identity (max residual " +
                                to_text(res.max_abs_entry_error) + ")");
    using Tr = ScalarTraits<T>;
    int negatives = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const int s = Tr::sign(w(i, 1), tol);
        if (s == 0) throw std::domain_error("row " + std::to_string(i) + " has zero curvature");
        if (s < 0) ++negatives;
    }
    const bool negative = negatives == 2;
    const Matrix<T> pos = negative ? w * T(-1) : w;

    OneDimConfig<T> c;
    c.negative = negative;
    std::size_t finite = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const T r = T(1) / pos(i, 1);
        const T x = pos(i, 2) * r;
        if (Tr::sign(r, tol) > 0)
            c.intervals[finite++] = make_interval(x - r, x + r);
        else
            c.intervals[2] = make_infinite_interval(x + r, x - r);
    }
    c.w = augmented_1d(c);
    return c;
}

template <Scalar T>
T third_curvature(const T& a1, const T& a2) {
    // Q_1 = -2(a1 a2 + a3 (a1 + a2)).
    if (ScalarTraits<T>::is_zero(a1 + a2, 0.0)) throw std::domain_error("no completing curvature when a1 + a2 = 0");
    return -(a1 * a2) / (a1 + a2);
}

#define DESCARTES_INSTANTIATE(T)                                                                          \
    template struct OrientedInterval<T>;                                                                  \
    template struct OneDimConfig<T>;                                                                      \
    template OrientedInterval<T> make_interval<T>(T, T);                                                  \
    template OrientedInterval<T> make_infinite_interval<T>(T, T);                                         \
    template OneDimConfig<T> complete_line<T>(const OrientedInterval<T>&, const OrientedInterval<T>&);    \
    template T descartes_1d_check<T>(const Vec<T>&);                                                      \
    template Vec<T> interval_row<T>(const OrientedInterval<T>&);                                          \
    template T reflection_shift<T>(const OrientedInterval<T>&);                                           \
    template Vec<T> infinite_interval_row<T>(const OrientedInterval<T>&);                                 \
    template Matrix<T> augmented_1d<T>(const OneDimConfig<T>&);                                           \
    template OneDimConfig<T> reversed<T>(const OneDimConfig<T>&);                                         \
    template OneDimConfig<T> config_from_augmented_1d<T>(const Matrix<T>&, double);                       \
    template T third_curvature<T>(const T&, const T&);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
