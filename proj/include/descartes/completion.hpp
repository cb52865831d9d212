#pragma once

#include <vector>

#include "descartes/matrix.hpp"

namespace descartes {

class DegenerateConfigurationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Given k = n+1 rows that are pairwise tangent under `form` (self-product
/// 1, mutual product -1), returns every row w completing them: w.form.row_i
/// = -1 for all i and w.form.w = 1.  Two rows for n >= 2 (returned "+" root
/// first), one row for n = 1 where the constraint is linear.
template <Scalar T>
std::vector<Vec<T>> complete_rows(const Matrix<T>& form, const std::vector<Vec<T>>& rows,
                                  double tol = kDefaultTolerance);

}  // namespace descartes
