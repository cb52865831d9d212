#pragma once

// Apollonian packings: the orbit of a Descartes configuration under the
// n+2 reflections that each replace one sphere by the other sphere tangent
// to the remaining n+1.

#include <cstdint>
#include <optional>
#include <utility>

#include "descartes/config.hpp"

namespace descartes {

/// Row operator R_i (0-based i): new row i = (2/(n-1)) sum_{j != i} row_j - row_i.
/// Acts on configurations as W -> R_i W.
template <Scalar T>
Matrix<T> reflection_matrix(std::size_t n, std::size_t i);

/// Replaces row i.  Throws DimensionError for n = 1, where the
/// coefficient 2/(n-1) is undefined.
template <Scalar T>
ConfigMatrix<T> reflect(const ConfigMatrix<T>& w, std::size_t i);

template <Scalar T>
struct GenerateOptions {
    T bound{0};                   // keep rows with |bend entry| <= bound
    std::optional<T> euclid_bound;  // also bound the planar bend b (spherical/hyperbolic rows)
    unsigned threads = 1;
    std::size_t max_configs = 4'000'000;
    std::optional<std::size_t> max_depth;       // stop after this many BFS levels
    std::optional<std::uint64_t> shuffle_seed;  // randomize frontier order per level
    bool verify_each = false;                   // check the Gram identity of every new configuration
    double tol = kDefaultTolerance;
};

template <Scalar T>
struct Packing {
    Geometry geometry = Geometry::Euclidean;
    std::size_t n = 2;
    ConfigMatrix<T> seed;
    std::vector<CoordRow<T>> rows;           // deduplicated, canonically sorted
    std::vector<ConfigMatrix<T>> configs;    // every configuration visited, seed first
    T bound{0};
    std::optional<T> euclid_bound;
    std::size_t depth = 0;                   // number of BFS levels expanded
    // For n >= 4 the generated spheres overlap, so the rows are an orbit
    // of the reflection group rather than a packing.
    bool combinatorial_only = false;
};

class GenerationLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Breadth-first closure of `seed` under all reflections.  A reflection is
/// followed only if the sphere it creates is within the bound(s).  The row
/// set does not depend on frontier order or thread count.
template <Scalar T>
Packing<T> generate(const ConfigMatrix<T>& seed, const GenerateOptions<T>& opts);

/// Planar bend b of a row in any geometry (b, cot + y0 csc, or coth + ...).
template <Scalar T>
T euclidean_bend(const CoordRow<T>& row);

/// Exact rows compare by value; float rows are rounded to 1e-6.
template <Scalar T>
std::string row_key(const Vec<T>& row);

/// Bend entry first, then the remaining entries lexicographically.
template <Scalar T>
bool canonical_row_less(const CoordRow<T>& a, const CoordRow<T>& b);

template <Scalar T>
struct LoxodromicSequence {
    std::size_t n = 2;
    std::vector<T> bends;  // the n+2 seed bends followed by one per step
    std::vector<ConfigMatrix<T>> configs;
};

/// Repeatedly reflects the row with the smallest bend entry (the largest
/// sphere), lowest index on ties.
template <Scalar T>
LoxodromicSequence<T> loxodromic(const ConfigMatrix<T>& seed, std::size_t steps);

/// x_{k+1} = (2/(n-1))(x_k + ... + x_{k-n}) - x_{k-n-1} for every term
/// after the seed; for n = 2 this is x_{k+1} = 2x_k + 2x_{k-1} + 2x_{k-2} - x_{k-3}.
template <Scalar T>
bool recurrence_check(const LoxodromicSequence<T>& seq, double tol = kDefaultTolerance);

struct IntegralityReport {
    bool all_integral = true;
    std::vector<std::pair<Exact, std::size_t>> multiplicities;  // ascending bend values
    std::size_t row_count = 0;
};

/// Exact mode only; throws std::invalid_argument for float packings.
template <Scalar T>
IntegralityReport integrality_report(const Packing<T>& p);

/// Same packing expressed in another geometry's coordinates.
template <Scalar T>
Packing<T> convert_packing(const Packing<T>& p, Geometry to);

}  // namespace descartes
