#pragma once

// Descartes configurations on the line: two touching intervals and the
// "infinite interval" covering the rest of R.  The infinite interval has
// negative radius, minus half the length of its complement.

#include <array>

#include "descartes/completion.hpp"
#include "descartes/config.hpp"

namespace descartes {

template <Scalar T>
struct OrientedInterval {
    // Finite: the interval [lo, hi].  Infinite: the complement of (lo, hi).
    T lo{0};
    T hi{1};
    bool infinite = false;

    T radius() const;    // (hi - lo)/2, negated for the infinite interval
    T curvature() const { return T(1) / radius(); }
    T midpoint() const;  // of [lo, hi] in both cases
};

/// Throws std::invalid_argument unless lo < hi.
template <Scalar T>
OrientedInterval<T> make_interval(T lo, T hi);

/// The infinite interval whose complement is (lo, hi).
template <Scalar T>
OrientedInterval<T> make_infinite_interval(T lo, T hi);

template <Scalar T>
struct OneDimConfig {
    std::array<OrientedInterval<T>, 3> intervals;  // two finite, then the infinite one
    bool negative = false;                          // all signs reversed
    Matrix<T> w;                                    // 3x3 augmented matrix

    Vec<T> radii() const;
    Vec<T> curvatures() const;
};

/// Completes two touching finite intervals with the complement of their
/// union.  Throws DegenerateConfigurationError if they do not share exactly
/// one endpoint with disjoint interiors.
template <Scalar T>
OneDimConfig<T> complete_line(const OrientedInterval<T>& first, const OrientedInterval<T>& second);

/// Q_1(a) = sum a_i^2 - (sum a_i)^2.  Zero on curvature vectors of
/// configurations.
template <Scalar T>
T descartes_1d_check(const Vec<T>& curvatures);

/// (b_bar, b, b x) for a finite interval with curvature b and center x.
template <Scalar T>
Vec<T> interval_row(const OrientedInterval<T>& finite);

/// Translation applied before reflecting the infinite interval by x -> 1/x:
/// zero when 0 lies strictly inside its complement, otherwise the shift
/// that moves the complement's midpoint to 0.
template <Scalar T>
T reflection_shift(const OrientedInterval<T>& infinite);

/// Row of the infinite interval.  Its curvature x center is that of the
/// finite interval x -> 1/x sends it to, after translating by
/// reflection_shift and translating back.
template <Scalar T>
Vec<T> infinite_interval_row(const OrientedInterval<T>& infinite);

/// The 3x3 matrix with rows for the three intervals, all negated for a
/// negatively oriented configuration.
template <Scalar T>
Matrix<T> augmented_1d(const OneDimConfig<T>& config);

/// Same intervals, opposite orientation.
template <Scalar T>
OneDimConfig<T> reversed(const OneDimConfig<T>& config);

/// Recovers the intervals from a 3x3 matrix satisfying the 1-D Gram
/// identity.  Throws std::domain_error otherwise.
template <Scalar T>
OneDimConfig<T> config_from_augmented_1d(const Matrix<T>& w, double tol = kDefaultTolerance);

/// The only curvature completing a1, a2: Q_1 is linear in each variable,
/// so a touching pair has exactly one partner and no packing grows.
template <Scalar T>
T third_curvature(const T& a1, const T& a2);

}  // namespace descartes
