#include "descartes/forms.hpp"

#include <stdexcept>

namespace descartes {

std::string_view to_string(Geometry g) {
    switch (g) {
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Spherical: return "spherical";
        case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

std::optional<Geometry> parse_geometry(std::string_view text) {
    if (text == "euclidean") return Geometry::Euclidean;
    if (text == "spherical") return Geometry::Spherical;
    if (text == "hyperbolic") return Geometry::Hyperbolic;
    return std::nullopt;
}

std::string_view to_string(GramLabel label) {
    switch (label) {
        case GramLabel::EuclideanM: return "euclidean-M";
        case GramLabel::EuclideanW: return "euclidean-W";
        case GramLabel::Spherical: return "spherical";
        case GramLabel::Hyperbolic: return "hyperbolic";
        case GramLabel::OneDim: return "onedim";
    }
    return "?";
}

namespace {

void require_dimension(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension n must be >= 1");
}

}  // namespace

template <Scalar T>
QuadForm<T> descartes_form(std::size_t n) {
    require_dimension(n);
    const std::size_t m = n + 2;
    const T off = -ScalarTraits<T>::from_ratio(1, static_cast<long>(n));
    Matrix<T> q(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q(i, j) = (i == j ? T(1) + off : off);
    return {n, std::move(q)};
}

template <Scalar T>
QuadForm<T> lorentz_like_form(std::size_t n) {
    require_dimension(n);
    Matrix<T> j = Matrix<T>::identity(n + 2);
    j(0, 0) = T(-1);
    return {n, std::move(j)};
}

template <Scalar T>
Matrix<T> descartes_form_inverse(std::size_t n) {
    require_dimension(n);
    const std::size_t m = n + 2;
    const T half = ScalarTraits<T>::from_ratio(1, 2);
    Matrix<T> q(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) q(i, j) = (i == j ? half : -half);
    return q;
}

template <Scalar T>
GramTarget<T> gram_target(Geometry g, std::size_t n) {
    require_dimension(n);
    const std::size_t m = n + 2;
    Matrix<T> t = Matrix<T>::identity(m) * T(2);
    GramLabel label = GramLabel::EuclideanW;
    switch (g) {
        case Geometry::Euclidean:
            t(0, 0) = T(0);
            t(1, 1) = T(0);
            t(0, 1) = T(-4);
            t(1, 0) = T(-4);
            label = n == 1 ? GramLabel::OneDim : GramLabel::EuclideanW;
            break;
        case Geometry::Spherical:
            t(0, 0) = T(-2);
            label = GramLabel::Spherical;
            break;
        case Geometry::Hyperbolic:
            t(1, 1) = T(-2);
            label = GramLabel::Hyperbolic;
            break;
    }
    return {std::move(t), label};
}

template <Scalar T>
GramTarget<T> euclidean_m_target(std::size_t n) {
    require_dimension(n);
    Matrix<T> t = Matrix<T>::identity(n + 1) * T(2);
    t(0, 0) = T(0);
    return {std::move(t), GramLabel::EuclideanM};
}

template <Scalar T>
Matrix<T> row_form(Geometry g, std::size_t n) {
    require_dimension(n);
    Matrix<T> k = Matrix<T>::identity(n + 2);
    switch (g) {
        case Geometry::Euclidean: {
            const T half = ScalarTraits<T>::from_ratio(-1, 2);
            k(0, 0) = T(0);
            k(1, 1) = T(0);
            k(0, 1) = half;
            k(1, 0) = half;
            break;
        }
        case Geometry::Spherical: k(0, 0) = T(-1); break;
        case Geometry::Hyperbolic: k(1, 1) = T(-1); break;
    }
    return k;
}

template <Scalar T>
Matrix<T> gram(const Matrix<T>& w, const QuadForm<T>& q) {
    if (w.rows() != q.matrix.rows())
        throw DimensionError("gram: W has " + std::to_string(w.rows()) + " rows, form has size " +
                             std::to_string(q.matrix.rows()));
    return w.transpose() * q.matrix * w;
}

template <Scalar T>
Residual<T> make_residual(Matrix<T> diff, double tol) {
    using Tr = ScalarTraits<T>;
    Residual<T> r;
    for (const auto& x : diff.data()) {
        T a = Tr::abs(x);
        if (a > r.max_abs_entry_error) r.max_abs_entry_error = a;
    }
    r.holds = Tr::is_zero(r.max_abs_entry_error, tol);
    r.entrywise = std::move(diff);
    return r;
}

template <Scalar T>
Residual<T> check_identity(const Matrix<T>& w, const QuadForm<T>& q, const GramTarget<T>& target, double tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be non-negative");
    Matrix<T> g = gram(w, q);
    if (g.rows() != target.matrix.rows() || g.cols() != target.matrix.cols())
        throw DimensionError("gram " + g.shape() + " vs target " + target.matrix.shape());
    return make_residual(g - target.matrix, tol);
}

template <Scalar T>
Residual<T> check_identity(const ConfigMatrix<T>& cfg, double tol) {
    return check_identity(cfg.w, descartes_form<T>(cfg.n), gram_target<T>(cfg.geometry, cfg.n), tol);
}

template <Scalar T>
Residual<T> inverse_conjugation_check(const Matrix<T>& w, const Matrix<T>& a, const Matrix<T>& b, double tol) {
    if (!a.square() || !b.square() || a.rows() != w.cols() || b.rows() != w.rows())
        throw DimensionError("inverse_conjugation_check: incompatible shapes");
    Matrix<T> a_inv = inverse(a);
    Matrix<T> b_inv = inverse(b);
    Residual<T> pre = make_residual(w * a * w.transpose() - b, tol);
    if (!pre.holds) throw std::domain_error("precondition W A W^T = B does not hold");
    return make_residual(w.transpose() * b_inv * w - a_inv, tol);
}

#define DESCARTES_INSTANTIATE(T)                                                                   \
    template QuadForm<T> descartes_form<T>(std::size_t);                                           \
    template QuadForm<T> lorentz_like_form<T>(std::size_t);                                        \
    template Matrix<T> descartes_form_inverse<T>(std::size_t);                                     \
    template GramTarget<T> gram_target<T>(Geometry, std::size_t);                                  \
    template GramTarget<T> euclidean_m_target<T>(std::size_t);                                     \
    template Matrix<T> row_form<T>(Geometry, std::size_t);                                         \
    template Matrix<T> gram<T>(const Matrix<T>&, const QuadForm<T>&);                              \
    template Residual<T> make_residual<T>(Matrix<T>, double);                                      \
    template Residual<T> check_identity<T>(const Matrix<T>&, const QuadForm<T>&, const GramTarget<T>&, \
                                           double);                                                \
    template Residual<T> check_identity<T>(const ConfigMatrix<T>&, double);                        \
    template Residual<T> inverse_conjugation_check<T>(const Matrix<T>&, const Matrix<T>&,          \
                                                      const Matrix<T>&, double);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
