#pragma once

#include <random>

#include "descartes/apollonian.hpp"
#include "descartes/euclid.hpp"
#include "descartes/forms.hpp"
#include "descartes/seeds.hpp"

namespace testing_support {

using descartes::ConfigMatrix;
using descartes::Exact;
using descartes::Geometry;
using descartes::Matrix;
using descartes::Vec;

inline Exact q(long num, long den = 1) { return Exact::ratio(num, den); }

template <class T>
Vec<T> vec(std::initializer_list<long> xs) {
    Vec<T> out;
    for (long x : xs) out.push_back(T(x));
    return out;
}

template <class T>
Matrix<T> to_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec<T>> out;
    for (const auto& r : rows) {
        Vec<T> v;
        for (long x : r) v.push_back(T(x));
        out.push_back(std::move(v));
    }
    return Matrix<T>::from_rows(out);
}

inline Matrix<double> to_double(const Matrix<Exact>& m) {
    Matrix<double> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
    return out;
}

// A rotation by a Pythagorean angle, exact in rational arithmetic.
template <class T>
Matrix<T> pythagorean_rotation(std::mt19937_64& rng) {
    static const long triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
    const auto& t = triples[rng() % 5];
    T c = descartes::ScalarTraits<T>::from_ratio(t[0], t[2]);
    T s = descartes::ScalarTraits<T>::from_ratio(t[1], t[2]);
    if (rng() % 2) s = -s;
    Matrix<T> r(2, 2);
    r(0, 0) = c, r(0, 1) = -s, r(1, 0) = s, r(1, 1) = c;
    return r;
}

// Random reflection word of length <= max_word applied to the canonical
// seed; for planar Euclidean configurations the result is re-realized from
// its bends and moved by a random similarity.
template <class T>
ConfigMatrix<T> random_config(Geometry g, std::size_t n, std::mt19937_64& rng, std::size_t max_word = 12) {
    ConfigMatrix<T> cfg = descartes::canonical_seed<T>(g, n);
    const std::size_t len = rng() % (max_word + 1);
    std::size_t last = n + 2;
    for (std::size_t s = 0; s < len; ++s) {
        std::size_t i = rng() % (n + 2);
        if (i == last) i = (i + 1) % (n + 2);
        cfg = descartes::reflect(cfg, i);
        last = i;
    }
    if (g == Geometry::Euclidean && n == 2) {
        ConfigMatrix<T> placed = descartes::realize_curvature_vector(cfg.bends());
        const auto rot = pythagorean_rotation<T>(rng);
        const T scale = descartes::ScalarTraits<T>::from_ratio(static_cast<long>(rng() % 7 + 1), static_cast<long>(rng() % 5 + 1));
        const Vec<T> shift{descartes::ScalarTraits<T>::from_ratio(static_cast<long>(rng() % 11) - 5, 3),
                           descartes::ScalarTraits<T>::from_ratio(static_cast<long>(rng() % 11) - 5, 4)};
        std::vector<descartes::EuclidObject<T>> objs;
        for (const auto& o : descartes::objects_from_config(placed))
            objs.push_back(descartes::transform_object(o, scale, rot, shift));
        return descartes::config_from_objects(objs);
    }
    return cfg;
}

}  // namespace testing_support
