#include "descartes/completion.hpp"

namespace descartes {

template <Scalar T>
std::vector<Vec<T>> complete_rows(const Matrix<T>& form, const std::vector<Vec<T>>& rows, double tol) {
    using Tr = ScalarTraits<T>;
    const std::size_t m = form.rows();
    if (rows.size() + 1 != m) throw DimensionError("completion needs exactly n+1 rows");
    Matrix<T> a(rows.size(), m);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m) throw DimensionError("completion: row length mismatch");
        a.set_row(i, rows[i] * form);
    }
    LinearSolution<T> sol;
    try {
        sol = solve_linear(a, Vec<T>(rows.size(), T(-1)));
    } catch (const std::domain_error&) {
        throw DegenerateConfigurationError("tangency constraints are inconsistent");
    }
    if (sol.null_basis.size() != 1)
        throw DegenerateConfigurationError("rows are linearly dependent (common tangency point)");

    const Vec<T>& p = sol.particular;
    const Vec<T>& u = sol.null_basis.front();
    const T qa = bilinear(u, form, u);
    const T qb = T(2) * bilinear(p, form, u);
    const T qc = bilinear(p, form, p) - T(1);

    auto at = [&](const T& t) {
        Vec<T> w = p;
        for (std::size_t i = 0; i < m; ++i) w[i] += t * u[i];
        return w;
    };

    if (Tr::is_zero(qa, tol)) {
        if (Tr::is_zero(qb, tol)) throw DegenerateConfigurationError("completion is not determined");
        return {at(-qc / qb)};
    }
    T disc = qb * qb - T(4) * qa * qc;
    if (Tr::sign(disc, tol) < 0) throw DegenerateConfigurationError("no real completion exists");
    if (Tr::sign(disc, tol) == 0) disc = T(0);
    T root = Tr::sqrt(disc);
    T denom = T(2) * qa;
    return {at((-qb + root) / denom), at((-qb - root) / denom)};
}

template std::vector<Vec<double>> complete_rows(const Matrix<double>&, const std::vector<Vec<double>>&, double);
template std::vector<Vec<Exact>> complete_rows(const Matrix<Exact>&, const std::vector<Vec<Exact>>&, double);

}  // namespace descartes
