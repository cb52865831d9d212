#pragma once

// Standard starting configurations, and realization of a prescribed bend
// column inside any geometry.
//
// Exact seeds need a quadratic field for n = 3, 4, 5: det(W)^2 is not a
// rational square there, so no Descartes configuration in those dimensions
// has all-rational coordinates.  The strip seeds below live in Q(sqrt 3),
// Q(sqrt 2) and Q(sqrt 5) respectively.

#include "descartes/config.hpp"

namespace descartes {

/// The planar configuration with bends (-1, 2, 2, 3): the unit circle
/// (inward), circles of radius 1/2 at (+-1/2, 0), and radius 1/3 at (0, 2/3).
template <Scalar T>
ConfigMatrix<T> figure3_seed();

/// Hyperplanes x_n = 0 and x_n = 2 and n unit balls centered at (c, 1)
/// for the vertices c of a regular simplex of edge 2 in R^{n-1}.
/// Bends (0, 0, 1, ..., 1).  Exact mode supports n <= 5.
template <Scalar T>
ConfigMatrix<T> strip_seed(std::size_t n);

/// Vertices of a regular simplex with edge length 2 in R^{m}, m+1 rows.
template <Scalar T>
std::vector<Vec<T>> regular_simplex(std::size_t m);

/// figure3 for n = 2, strip otherwise, converted into geometry g.
template <Scalar T>
ConfigMatrix<T> canonical_seed(Geometry g, std::size_t n);

/// A configuration in geometry g whose bend column equals `bends`.
/// Planar Euclidean vectors use realize_curvature_vector; everything else
/// applies a form-preserving reflection to the canonical seed.  Throws
/// std::domain_error if `bends` violates the Descartes relation.
template <Scalar T>
ConfigMatrix<T> realize_bends(Geometry g, std::size_t n, const Vec<T>& bends, double tol = kDefaultTolerance);

}  // namespace descartes
