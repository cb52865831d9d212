#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "descartes/matrix.hpp"

namespace descartes {

enum class Geometry { Euclidean, Spherical, Hyperbolic };

std::string_view to_string(Geometry g);
std::optional<Geometry> parse_geometry(std::string_view text);

/// Coordinates of one oriented sphere: augmented curvature-center
/// coordinates (Euclidean), w+ (spherical) or w- (hyperbolic).
template <Scalar T>
struct CoordRow {
    Vec<T> entries;
    Geometry kind = Geometry::Euclidean;

    std::size_t dimension() const { return entries.size() - 2; }
    const T& operator[](std::size_t i) const { return entries[i]; }
};

/// (n+2)x(n+2) stack of coordinate rows for one Descartes configuration.
template <Scalar T>
struct ConfigMatrix {
    Geometry geometry = Geometry::Euclidean;
    std::size_t n = 2;
    Matrix<T> w;

    ConfigMatrix() = default;
    ConfigMatrix(Geometry g, std::size_t dim, Matrix<T> m) : geometry(g), n(dim), w(std::move(m)) {
        if (w.rows() != n + 2 || w.cols() != n + 2)
            throw DimensionError("configuration matrix must be " + std::to_string(n + 2) + "x" +
                                 std::to_string(n + 2) + ", got " + w.shape());
    }

    CoordRow<T> row(std::size_t i) const { return {w.row(i), geometry}; }
    std::size_t size() const { return n + 2; }

    /// Column holding the geometry's bend: b for Euclidean, cot/coth otherwise.
    std::size_t bend_column() const { return geometry == Geometry::Euclidean ? 1 : 0; }
    Vec<T> bends() const { return w.col(bend_column()); }

    friend bool operator==(const ConfigMatrix& l, const ConfigMatrix& r) {
        return l.geometry == r.geometry && l.n == r.n && l.w == r.w;
    }
};

}  // namespace descartes
