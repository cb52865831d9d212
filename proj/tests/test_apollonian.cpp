#include <gtest/gtest.h>

#include <algorithm>

#include "descartes/hyperbolic.hpp"
#include "descartes/spherical.hpp"
#include "descartes/transform.hpp"
#include "support.hpp"

using namespace descartes;
using testing_support::q;
using testing_support::vec;

namespace {

std::vector<Exact> new_bends(const Packing<Exact>& p) {
    std::vector<Exact> out;
    for (std::size_t c = 1; c < p.configs.size(); ++c) {
        const auto& prev = p.configs[0];
        for (std::size_t i = 0; i < 4; ++i)
            if (p.configs[c].w.row(i) != prev.w.row(i)) out.push_back(p.configs[c].w(i, 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GenerateOptions<Exact> bound(long b) {
    GenerateOptions<Exact> o;
    o.bound = Exact(b);
    return o;
}

}  // namespace

TEST(Reflection, MatrixIsInvolutiveIsometry) {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto qn = descartes_form<Exact>(n).matrix;
        for (std::size_t i = 0; i < n + 2; ++i) {
            auto r = reflection_matrix<Exact>(n, i);
            EXPECT_EQ(r * r, Matrix<Exact>::identity(n + 2));
            EXPECT_EQ(r.transpose() * qn * r, qn);
        }
    }
    EXPECT_THROW(reflection_matrix<Exact>(1, 0), DimensionError);
}

TEST(Reflection, FigureThreeExamples) {
    auto seed = figure3_seed<Exact>();
    EXPECT_EQ(reflect(seed, 0).bends(), vec<Exact>({15, 2, 2, 3}));
    auto r3 = reflect(seed, 3);
    EXPECT_EQ(r3.bends(), vec<Exact>({-1, 2, 2, 3}));
    EXPECT_EQ(r3.w(3, 2), Exact(0));
    EXPECT_EQ(r3.w(3, 3), Exact(-2));  // b z = 3 * (-2i/3)
    EXPECT_TRUE(check_identity(r3).holds);
    EXPECT_EQ(reflect(reflect(seed, 2), 2), seed);
    EXPECT_EQ(reflect(seed, 0).w * Exact(1), reflection_matrix<Exact>(2, 0) * seed.w);
}

TEST(Reflection, SumRule) {
    auto seed = canonical_seed<Exact>(Geometry::Euclidean, 3);
    auto r = reflect(seed, 4);
    for (std::size_t k = 0; k < 5; ++k) {
        Exact fixed(0);
        for (std::size_t j = 0; j < 4; ++j) fixed += seed.w(j, k);
        EXPECT_EQ(seed.w(4, k) + r.w(4, k), fixed);  // 2/(n-1) = 1 for n = 3
    }
    EXPECT_TRUE(check_identity(r).holds);
}

TEST(Reflection, RejectsOneDimension) {
    ConfigMatrix<Exact> w(Geometry::Euclidean, 1, Matrix<Exact>::identity(3));
    EXPECT_THROW(reflect(w, 0), DimensionError);
}

TEST(Generate, FirstGeneration) {
    auto opts = bound(1000);
    opts.max_depth = 1;
    auto p = generate(figure3_seed<Exact>(), opts);
    EXPECT_EQ(p.depth, 1u);
    EXPECT_EQ(new_bends(p), vec<Exact>({3, 6, 6, 15}));
}

TEST(Generate, IntegralBends) {
    auto p = generate(figure3_seed<Exact>(), bound(200));
    auto rep = integrality_report(p);
    EXPECT_TRUE(rep.all_integral);
    EXPECT_EQ(rep.multiplicities.front(), (std::pair<Exact, std::size_t>{-1, 1}));
    EXPECT_EQ(rep.multiplicities[1], (std::pair<Exact, std::size_t>{2, 2}));
    EXPECT_EQ(rep.multiplicities[2], (std::pair<Exact, std::size_t>{3, 2}));
    for (const auto& cfg : p.configs) EXPECT_TRUE(check_identity(cfg).holds);
}

TEST(Generate, RowsAreTangentWithinConfigurations) {
    auto seed = realize_bends<Exact>(Geometry::Euclidean, 3, vec<Exact>({-1, 2, 2, 3, 3}));
    auto p = generate(seed, bound(30));
    EXPECT_GT(p.rows.size(), 20u);
    auto k = row_form<Exact>(Geometry::Euclidean, 3);
    for (const auto& cfg : p.configs) {
        auto prod = cfg.w * k * cfg.w.transpose();
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) ASSERT_EQ(prod(i, j), i == j ? Exact(1) : Exact(-1));
    }
    EXPECT_FALSE(p.combinatorial_only);
    GenerateOptions<double> four{.bound = 3.0};
    four.max_depth = 1;
    EXPECT_TRUE(generate(canonical_seed<double>(Geometry::Euclidean, 4), four).combinatorial_only);
}

TEST(Generate, NonIntegralSeedReported) {
    // A rational rescaling of the standard quadruple.
    Vec<Exact> b = {q(-1, 2), 1, 1, q(3, 2)};
    auto p = generate(realize_curvature_vector(b), bound(20));
    EXPECT_FALSE(integrality_report(p).all_integral);
    EXPECT_THROW(integrality_report(generate(figure3_seed<double>(), GenerateOptions<double>{.bound = 5.0})),
                 std::invalid_argument);
}

TEST(Generate, HorocyclesHaveCothOne) {
    auto seed = canonical_seed<Exact>(Geometry::Hyperbolic, 2);
    auto opts = bound(60);
    opts.euclid_bound = Exact(60);
    auto p = generate(seed, opts);
    std::size_t horocycles = 0;
    for (const auto& r : p.rows) {
        if (classify_row(r) == RowClass::Horocycle) {
            ++horocycles;
            EXPECT_EQ(r[0], Exact(1));
        }
    }
    EXPECT_GT(horocycles, 10u);
}

TEST(Generate, OrderAndThreadIndependence) {
    auto seed = figure3_seed<Exact>();
    auto base = generate(seed, bound(150));
    auto key = [](const Packing<Exact>& p) {
        std::vector<std::string> keys;
        for (const auto& r : p.rows) keys.push_back(row_key(r.entries));
        return keys;
    };
    for (std::uint64_t s : {1u, 2u, 3u}) {
        auto opts = bound(150);
        opts.shuffle_seed = s;
        EXPECT_EQ(key(generate(seed, opts)), key(base));
    }
    auto opts = bound(150);
    opts.threads = 4;
    auto par = generate(seed, opts);
    EXPECT_EQ(key(par), key(base));
    EXPECT_EQ(par.configs.size(), base.configs.size());
}

TEST(Generate, InfiniteStripHitsLimit) {
    auto opts = bound(3);
    opts.max_configs = 500;
    EXPECT_THROW(generate(realize_curvature_vector(vec<Exact>({0, 0, 1, 1})), opts), GenerationLimitError);
}

TEST(Generate, RejectsInvalidSeed) {
    auto seed = figure3_seed<Exact>();
    seed.w(1, 1) = Exact(5);
    EXPECT_THROW(generate(seed, bound(10)), std::domain_error);
}

TEST(Loxodromic, ThreeGeometries) {
    auto e = loxodromic(canonical_seed<Exact>(Geometry::Euclidean, 2), 3);
    auto s = loxodromic(canonical_seed<Exact>(Geometry::Spherical, 2), 3);
    auto h = loxodromic(canonical_seed<Exact>(Geometry::Hyperbolic, 2), 3);
    EXPECT_EQ(e.bends, vec<Exact>({-1, 2, 2, 3, 15, 38, 110}));
    EXPECT_EQ(s.bends, vec<Exact>({0, 1, 1, 2, 8, 21, 61}));
    EXPECT_EQ(h.bends, vec<Exact>({-1, 1, 1, 1, 7, 17, 49}));
    for (std::size_t k = 0; k < e.bends.size(); ++k) EXPECT_EQ(s.bends[k] + h.bends[k], e.bends[k]);
}

TEST(Loxodromic, Recurrence) {
    for (Geometry g : {Geometry::Euclidean, Geometry::Spherical, Geometry::Hyperbolic}) {
        auto seq = loxodromic(canonical_seed<Exact>(g, 2), 46);
        EXPECT_EQ(seq.bends.size(), 50u);
        EXPECT_TRUE(recurrence_check(seq));
        for (const auto& c : seq.configs) EXPECT_TRUE(check_identity(c).holds);
    }
    auto seq = loxodromic(canonical_seed<Exact>(Geometry::Euclidean, 2), 4);
    seq.bends[6] += Exact(1);
    EXPECT_FALSE(recurrence_check(seq));
}

TEST(Loxodromic, HigherDimension) {
    auto seq = loxodromic(canonical_seed<Exact>(Geometry::Euclidean, 3), 12);
    EXPECT_TRUE(recurrence_check(seq));
}

TEST(Seeds, StripSeedsAreExact) {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto w = strip_seed<Exact>(n);
        EXPECT_TRUE(check_identity(w).holds) << n;
        Vec<Exact> expect(n + 2, Exact(1));
        expect[0] = expect[1] = Exact(0);
        EXPECT_EQ(w.bends(), expect);
    }
    EXPECT_THROW(strip_seed<Exact>(6), FieldError);
    for (std::size_t n = 6; n <= 8; ++n) EXPECT_TRUE(check_identity(strip_seed<double>(n), 1e-9).holds) << n;
}

TEST(Seeds, StripMatchesPlanarExample) {
    auto w = strip_seed<Exact>(2);
    EXPECT_EQ(w.w, testing_support::to_matrix<Exact>({{0, 0, 0, -1}, {4, 0, 0, 1}, {0, 1, 0, 1}, {4, 1, 2, 1}}));
}

TEST(Seeds, RealizeBends) {
    auto h = realize_bends<Exact>(Geometry::Hyperbolic, 2, vec<Exact>({-2, 3, 5, 6}));
    EXPECT_EQ(h.bends(), vec<Exact>({-2, 3, 5, 6}));
    EXPECT_TRUE(check_identity(h).holds);
    for (const auto& x : h.w.data()) EXPECT_TRUE(x.is_rational());
    auto s = realize_bends<Exact>(Geometry::Spherical, 2, vec<Exact>({0, 1, 1, 2}));
    EXPECT_EQ(s.bends(), vec<Exact>({0, 1, 1, 2}));
    auto e3 = realize_bends<Exact>(Geometry::Euclidean, 3, vec<Exact>({0, 0, 1, 1, 1}));
    EXPECT_TRUE(check_identity(e3).holds);
    auto e3b = realize_bends<Exact>(Geometry::Euclidean, 3, vec<Exact>({-1, 2, 2, 3, 3}));
    EXPECT_EQ(e3b.bends(), vec<Exact>({-1, 2, 2, 3, 3}));
    EXPECT_TRUE(check_identity(e3b).holds);
    EXPECT_THROW(realize_bends<Exact>(Geometry::Hyperbolic, 2, vec<Exact>({1, 1, 1, 1})), std::domain_error);
}

TEST(Packing, ConvertedPackingsAddUp) {
    auto e = generate(figure3_seed<Exact>(), bound(100));
    auto s = convert_packing(e, Geometry::Spherical);
    auto h = convert_packing(e, Geometry::Hyperbolic);
    for (std::size_t c = 0; c < e.configs.size(); ++c) {
        for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(s.configs[c].w(i, 0) + h.configs[c].w(i, 0), e.configs[c].w(i, 1));
        EXPECT_EQ(spherical_soddy_check(s.configs[c].bends()), Exact(0));
        EXPECT_EQ(hyp_soddy_check(h.configs[c].bends()), Exact(0));
    }
}
