#include "descartes/apollonian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <unordered_set>

#include "descartes/forms.hpp"
#include "descartes/transform.hpp"

namespace descartes {

template <Scalar T>
Matrix<T> reflection_matrix(std::size_t n, std::size_t i) {
    if (n < 2) throw DimensionError("reflection needs n >= 2; in one dimension the configuration is rigid");
    if (i >= n + 2) throw std::out_of_range("reflection index out of range");
    const T c = T(2) / T(static_cast<long>(n - 1));
    Matrix<T> r = Matrix<T>::identity(n + 2);
    for (std::size_t j = 0; j < n + 2; ++j) r(i, j) = j == i ? T(-1) : c;
    return r;
}

template <Scalar T>
ConfigMatrix<T> reflect(const ConfigMatrix<T>& w, std::size_t i) {
    const std::size_t n = w.n;
    if (n < 2) throw DimensionError("reflection needs n >= 2; in one dimension the configuration is rigid");
    if (i >= n + 2) throw std::out_of_range("reflection index out of range");
    const T c = T(2) / T(static_cast<long>(n - 1));
    ConfigMatrix<T> out = w;
    for (std::size_t col = 0; col < n + 2; ++col) {
        T sum(0);
        for (std::size_t j = 0; j < n + 2; ++j)
            if (j != i) sum += w.w(j, col);
        out.w(i, col) = c * sum - w.w(i, col);
    }
    return out;
}

template <Scalar T>
T euclidean_bend(const CoordRow<T>& row) {
    return row.kind == Geometry::Euclidean ? row[1] : row[0] + row[1];
}

template <Scalar T>
std::string row_key(const Vec<T>& row) {
    std::string key;
    for (const auto& x : row) {
        if constexpr (ScalarTraits<T>::is_exact) {
            key += x.str();
        } else {
            long long q = std::llround(x * 1e6);
            key += std::to_string(q);
        }
        key += ',';
    }
    return key;
}

template <Scalar T>
bool canonical_row_less(const CoordRow<T>& a, const CoordRow<T>& b) {
    const std::size_t k = a.kind == Geometry::Euclidean ? 1 : 0;
    if (a[k] != b[k]) return a[k] < b[k];
    return std::lexicographical_compare(a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end());
}

namespace {

template <Scalar T>
std::string config_key(const ConfigMatrix<T>& w) {
    std::vector<std::string> keys;
    keys.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) keys.push_back(row_key(w.w.row(i)));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += k + '|';
    return out;
}

template <Scalar T>
struct Node {
    ConfigMatrix<T> cfg;
    std::size_t came_from;  // index just reflected; reflecting it again walks back
};

template <Scalar T>
struct Candidate {
    ConfigMatrix<T> cfg;
    std::size_t index;
    std::string cfg_key;
    std::string row_key;
};

template <Scalar T>
bool within(const CoordRow<T>& row, const GenerateOptions<T>& opts) {
    using Tr = ScalarTraits<T>;
    const std::size_t k = row.kind == Geometry::Euclidean ? 1 : 0;
    if (Tr::sign(Tr::abs(row[k]) - opts.bound, opts.tol) > 0) return false;
    if (opts.euclid_bound && Tr::sign(Tr::abs(euclidean_bend(row)) - *opts.euclid_bound, opts.tol) > 0) return false;
    return true;
}

template <Scalar T>
std::vector<Candidate<T>> expand(const Node<T>& node, const GenerateOptions<T>& opts) {
    std::vector<Candidate<T>> out;
    for (std::size_t i = 0; i < node.cfg.size(); ++i) {
        if (i == node.came_from) continue;
        ConfigMatrix<T> next = reflect(node.cfg, i);
        CoordRow<T> row = next.row(i);
        if (!within(row, opts)) continue;
        if (opts.verify_each && !check_identity(next, opts.tol).holds)
            throw std::logic_error("reflection broke the Gram identity");
        std::string rk = row_key(row.entries);
        std::string ck = config_key(next);
        out.push_back({std::move(next), i, std::move(ck), std::move(rk)});
    }
    return out;
}

}  // namespace

template <Scalar T>
Packing<T> generate(const ConfigMatrix<T>& seed, const GenerateOptions<T>& opts) {
    const Residual<T> res = check_identity(seed, opts.tol);
    if (!res.holds)
        throw std::domain_error("seed violates the " + std::string(to_string(seed.geometry)) +
                                " Gram identity (max residual " + to_text(res.max_abs_entry_error) + ")");
    if (seed.n < 2) throw DimensionError("packings need n >= 2");

    Packing<T> p;
    p.geometry = seed.geometry;
    p.n = seed.n;
    p.seed = seed;
    p.bound = opts.bound;
    p.euclid_bound = opts.euclid_bound;
    p.combinatorial_only = seed.n >= 4;

    std::unordered_set<std::string> seen_configs{config_key(seed)};
    std::unordered_set<std::string> seen_rows;
    for (std::size_t i = 0; i < seed.size(); ++i)
        if (seen_rows.insert(row_key(seed.w.row(i))).second) p.rows.push_back(seed.row(i));
    p.configs.push_back(seed);

    std::vector<Node<T>> frontier{{seed, seed.size()}};
    std::mt19937_64 rng(opts.shuffle_seed.value_or(0));
    const unsigned threads = std::max(1u, opts.threads);

    while (!frontier.empty() && (!opts.max_depth || p.depth < *opts.max_depth)) {
        if (opts.shuffle_seed) std::shuffle(frontier.begin(), frontier.end(), rng);

        std::vector<std::vector<Candidate<T>>> produced(frontier.size());
        if (threads == 1 || frontier.size() < 2 * threads) {
            for (std::size_t f = 0; f < frontier.size(); ++f) produced[f] = expand(frontier[f], opts);
        } else {
            std::vector<std::thread> pool;
            std::vector<std::exception_ptr> errors(threads);
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t f = t; f < frontier.size(); f += threads) produced[f] = expand(frontier[f], opts);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }

        // Merge in frontier order so the stored configurations do not depend
        // on the thread count.
        std::vector<Node<T>> next;
        for (auto& batch : produced) {
            for (auto& c : batch) {
                if (!seen_configs.insert(c.cfg_key).second) continue;
                if (seen_rows.insert(c.row_key).second) p.rows.push_back(c.cfg.row(c.index));
                p.configs.push_back(c.cfg);
                next.push_back({std::move(c.cfg), c.index});
            }
            if (p.configs.size() > opts.max_configs)
                throw GenerationLimitError("generation exceeded " + std::to_string(opts.max_configs) +
                                           " configurations; the bound may not cut the packing off");
        }
        frontier = std::move(next);
        if (!frontier.empty()) ++p.depth;
    }

    std::sort(p.rows.begin(), p.rows.end(), canonical_row_less<T>);
    return p;
}

template <Scalar T>
LoxodromicSequence<T> loxodromic(const ConfigMatrix<T>& seed, std::size_t steps) {
    LoxodromicSequence<T> seq;
    seq.n = seed.n;
    seq.bends = seed.bends();
    seq.configs.push_back(seed);
    const std::size_t k = seed.bend_column();
    ConfigMatrix<T> cur = seed;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < cur.size(); ++i)
            if (cur.w(i, k) < cur.w(best, k)) best = i;
        cur = reflect(cur, best);
        seq.bends.push_back(cur.w(best, k));
        seq.configs.push_back(cur);
    }
    return seq;
}

template <Scalar T>
bool recurrence_check(const LoxodromicSequence<T>& seq, double tol) {
    using Tr = ScalarTraits<T>;
    const std::size_t m = seq.n + 2;
    if (seq.n < 2 || seq.bends.size() < m + 1) return false;
    const T c = T(2) / T(static_cast<long>(seq.n - 1));
    for (std::size_t k = m; k < seq.bends.size(); ++k) {
        T expect(0);
        for (std::size_t j = k - m + 1; j < k; ++j) expect += seq.bends[j];
        expect = c * expect - seq.bends[k - m];
        const T diff = seq.bends[k] - expect;
        const double scale = std::max(1.0, std::fabs(Tr::to_double(seq.bends[k])));
        if (!Tr::is_zero(diff, tol * scale)) return false;
    }
    return true;
}

template <Scalar T>
IntegralityReport integrality_report(const Packing<T>& p) {
    if constexpr (!ScalarTraits<T>::is_exact) {
        (void)p;
        throw std::invalid_argument("integrality_report needs an exact packing");
    } else {
        IntegralityReport rep;
        const std::size_t k = p.geometry == Geometry::Euclidean ? 1 : 0;
        std::vector<Exact> bends;
        for (const auto& r : p.rows) {
            bends.push_back(r[k]);
            if (!r[k].is_integer()) rep.all_integral = false;
        }
        std::sort(bends.begin(), bends.end());
        for (const auto& b : bends) {
            if (!rep.multiplicities.empty() && rep.multiplicities.back().first == b)
                ++rep.multiplicities.back().second;
            else
                rep.multiplicities.emplace_back(b, 1);
        }
        rep.row_count = p.rows.size();
        return rep;
    }
}

template <Scalar T>
Packing<T> convert_packing(const Packing<T>& p, Geometry to) {
    Packing<T> out = p;
    out.geometry = to;
    const Matrix<T> c = conversion_matrix<T>(p.geometry, to, p.n).matrix;
    out.seed = convert_matrix(p.seed, to);
    for (auto& cfg : out.configs) cfg = ConfigMatrix<T>(to, p.n, cfg.w * c);
    for (auto& r : out.rows) r = {r.entries * c, to};
    std::sort(out.rows.begin(), out.rows.end(), canonical_row_less<T>);
    return out;
}

#define DESCARTES_INSTANTIATE(T)                                                     \
    template Matrix<T> reflection_matrix<T>(std::size_t, std::size_t);              \
    template ConfigMatrix<T> reflect<T>(const ConfigMatrix<T>&, std::size_t);         \
    template T euclidean_bend<T>(const CoordRow<T>&);                                 \
    template std::string row_key<T>(const Vec<T>&);                                   \
    template bool canonical_row_less<T>(const CoordRow<T>&, const CoordRow<T>&);      \
    template Packing<T> generate<T>(const ConfigMatrix<T>&, const GenerateOptions<T>&); \
    template LoxodromicSequence<T> loxodromic<T>(const ConfigMatrix<T>&, std::size_t); \
    template bool recurrence_check<T>(const LoxodromicSequence<T>&, double);          \
    template IntegralityReport integrality_report<T>(const Packing<T>&);              \
    template Packing<T> convert_packing<T>(const Packing<T>&, Geometry);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
