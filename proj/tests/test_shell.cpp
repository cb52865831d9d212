#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "descartes/cli.hpp"
#include "descartes/io.hpp"
#include "descartes/render.hpp"
#include "descartes/spherical.hpp"
#include "descartes/transform.hpp"
#include "support.hpp"

using namespace descartes;
using testing_support::q;
using testing_support::vec;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "descartes");
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return ::testing::TempDir() + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream(path) << text;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = hay.find(needle); at != std::string::npos; at = hay.find(needle, at + 1)) ++n;
    return n;
}

Packing<Exact> figure3_packing(long bound) {
    GenerateOptions<Exact> o;
    o.bound = Exact(bound);
    return generate(figure3_seed<Exact>(), o);
}

Packing<Exact> seed_only(const ConfigMatrix<Exact>& seed) {
    GenerateOptions<Exact> o;
    o.bound = Exact(1000);
    o.max_depth = 0;
    return generate(seed, o);
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST(Scalars, ParseForms) {
    EXPECT_EQ(parse_scalar<Exact>("3/6"), q(1, 2));
    EXPECT_EQ(parse_scalar<Exact>("-0.125"), q(-1, 8));
    EXPECT_EQ(parse_scalar<Exact>("1+2*sqrt(3)"), Exact(1) + Exact(2) * Exact::sqrt(Exact(3)));
    EXPECT_DOUBLE_EQ(parse_scalar<double>("2.5"), 2.5);
    EXPECT_DOUBLE_EQ(parse_scalar<double>("1/4"), 0.25);
    EXPECT_THROW(parse_scalar<Exact>("x"), DocumentError);
    EXPECT_EQ(parse_scalar_list<Exact>("-1, 2,2,3"), vec<Exact>({-1, 2, 2, 3}));
    EXPECT_THROW(parse_scalar_list<Exact>("1,,2"), DocumentError);
}

TEST(Documents, ExactRoundTrip) {
    const auto cfg = canonical_seed<Exact>(Geometry::Euclidean, 3);  // entries in Q(sqrt 3)
    const Json j = config_to_json(cfg);
    EXPECT_EQ(j["mode"], "exact");
    EXPECT_TRUE(j["rows"][0][0].is_string());
    const auto back = config_from_json<Exact>(Json::parse(format_document(j)));
    EXPECT_TRUE(back.valid);
    EXPECT_EQ(back.config, cfg);
    EXPECT_EQ(config_to_json(back.config), j);
}

TEST(Documents, FloatRoundTrip) {
    const auto cfg = canonical_seed<double>(Geometry::Hyperbolic, 4);
    const auto back = config_from_json<double>(Json::parse(config_to_json(cfg).dump()));
    EXPECT_EQ(back.config, cfg);  // shortest round-trip decimals
}

TEST(Documents, StrictAndLenient) {
    Json j = config_to_json(figure3_seed<Exact>());
    j["rows"][0][0] = "7";
    EXPECT_THROW(config_from_json<Exact>(j), ValidationError);
    const auto lenient = config_from_json<Exact>(j, false);
    EXPECT_FALSE(lenient.valid);
    EXPECT_GT(lenient.residual.max_abs_entry_error, Exact(0));
}

TEST(Documents, Malformed) {
    EXPECT_THROW(config_from_json<Exact>(Json::parse(R"({"geometry":"euclidean"})")), DocumentError);
    EXPECT_THROW(config_from_json<Exact>(Json::parse(R"({"geometry":"flat","rows":[[1,2,3]]})")), DocumentError);
    EXPECT_THROW(config_from_json<Exact>(Json::parse(R"({"rows":[[1,2],[3]]})")), DocumentError);
    EXPECT_THROW(config_from_json<Exact>(Json::parse(R"({"n":3,"rows":[[0,1,0,0],[0,1,0,0],[0,1,0,0],[0,1,0,0]]})")),
                 DocumentError);
    EXPECT_THROW(config_from_json<Exact>(Json::parse(R"({"rows":[[0.5,1,0,0],[0,1,0,0],[0,1,0,0],[0,1,0,0]]})")),
                 DocumentError);
}

TEST(Documents, PackingStream) {
    const auto p = figure3_packing(30);
    std::stringstream s;
    write_packing(s, p);
    const std::string text = s.str();
    EXPECT_EQ(count(text, "\n"), p.rows.size() + 1);
    const auto back = read_packing<Exact>(s);
    EXPECT_EQ(back.geometry, p.geometry);
    EXPECT_EQ(back.bound, p.bound);
    EXPECT_EQ(back.seed, p.seed);
    ASSERT_EQ(back.rows.size(), p.rows.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) EXPECT_EQ(back.rows[i].entries, p.rows[i].entries);

    std::istringstream bad("{\"type\":\"config\"}\n");
    EXPECT_THROW(read_packing<Exact>(bad), DocumentError);
}

TEST(Render, LabelsFormat) {
    EXPECT_EQ(bend_label(q(15)), "15");
    EXPECT_EQ(bend_label(q(1, 3)), "0.333333");
    EXPECT_EQ(bend_label(3.0000000000001), "3");
    EXPECT_EQ(bend_label(-0.0), "0");
    EXPECT_EQ(bend_label(1234.56789), "1234.57");
}

TEST(Render, EuclideanSeedOnly) {
    const auto r = render_euclidean(seed_only(figure3_seed<Exact>()), RenderOptions{});
    EXPECT_EQ(r.circles, 4u);
    EXPECT_EQ(count(r.svg, "<circle"), 4u);
    EXPECT_EQ(sorted(r.labels), (std::vector<std::string>{"2", "2", "3"}));
}

TEST(Render, EuclideanLabels) {
    const auto r = render_euclidean(figure3_packing(20), RenderOptions{});
    for (const char* want : {"2", "3", "6", "15"}) {
        EXPECT_GE(std::count(r.labels.begin(), r.labels.end(), want), std::string(want) == "15" ? 1 : 2) << want;
        EXPECT_NE(r.svg.find(std::string(">") + want + "<"), std::string::npos);
    }
    // Every label is an integer bend.
    for (const auto& l : r.labels) EXPECT_EQ(l.find('.'), std::string::npos);
}

TEST(Render, Cutoff) {
    RenderOptions o;
    o.cutoff = 0.05;
    const auto coarse = render_euclidean(figure3_packing(60), o);
    const auto fine = render_euclidean(figure3_packing(60), RenderOptions{});
    EXPECT_LT(coarse.circles, fine.circles);
    EXPECT_GT(coarse.skipped_small, 0u);
    o.cutoff = 1.5;
    EXPECT_THROW(render_euclidean(figure3_packing(5), o), std::invalid_argument);
}

TEST(Render, StripDrawsLines) {
    const auto r = render_euclidean(seed_only(strip_seed<Exact>(2)), RenderOptions{});
    EXPECT_EQ(r.lines, 2u);
    EXPECT_EQ(r.circles, 2u);
}

TEST(Render, Deterministic) {
    const auto p = figure3_packing(100);
    EXPECT_EQ(render_euclidean(p, RenderOptions{}).svg, render_euclidean(p, RenderOptions{}).svg);
    const auto h = convert_packing(p, Geometry::Hyperbolic);
    EXPECT_EQ(render_hyperbolic_disk(h, RenderOptions{}).svg, render_hyperbolic_disk(h, RenderOptions{}).svg);
}

TEST(Render, RejectsNonPlanar) {
    GenerateOptions<Exact> o;
    o.bound = Exact(3);
    o.max_depth = 1;
    const auto p = generate(canonical_seed<Exact>(Geometry::Euclidean, 3), o);
    EXPECT_THROW(render_euclidean(p, RenderOptions{}), DimensionError);
    EXPECT_THROW(render_spherical(figure3_packing(5), RenderOptions{}), std::invalid_argument);
}

TEST(Render, HyperbolicDisk) {
    const auto h = convert_packing(figure3_packing(60), Geometry::Hyperbolic);
    const auto r = render_hyperbolic_disk(h, RenderOptions{});
    const auto ones = std::count(r.labels.begin(), r.labels.end(), "1");
    EXPECT_GE(ones, 10);
    EXPECT_EQ(r.skipped_virtual, 0u);  // only the absolute is virtual here
}

TEST(Render, HyperbolicSeedOnly) {
    const auto seed = realize_bends<Exact>(Geometry::Hyperbolic, 2, vec<Exact>({-1, 1, 1, 1}));
    const auto r = render_hyperbolic_disk(seed_only(seed), RenderOptions{});
    EXPECT_EQ(r.circles, 4u);  // absolute + three horocycles
    EXPECT_EQ(r.labels, (std::vector<std::string>{"1", "1", "1"}));
    EXPECT_EQ(r.skipped_virtual, 0u);
}

TEST(Render, HyperbolicVirtualRowsSkipped) {
    // A Descartes configuration in the plane that does not contain the
    // unit circle has rows with no real hyperbolic locus.
    auto p = seed_only(convert_matrix(strip_seed<Exact>(2), Geometry::Hyperbolic));
    const auto r = render_hyperbolic_disk(p, RenderOptions{});
    EXPECT_GT(r.skipped_virtual, 0u);
}

TEST(Render, SphericalLabels) {
    const auto s = convert_packing(figure3_packing(40), Geometry::Spherical);
    const auto r = render_spherical(s, RenderOptions{});
    ASSERT_GE(r.labels.size(), 4u);
    EXPECT_EQ(std::vector<std::string>(r.labels.begin(), r.labels.begin() + 4),
              (std::vector<std::string>{"0", "1", "1", "2"}));
    RenderOptions stereo;
    stereo.projection = Projection::Stereographic;
    const auto st = render_spherical(s, stereo);
    EXPECT_GT(st.circles, 10u);
    EXPECT_EQ(st.svg, render_spherical(s, stereo).svg);
}

TEST(Render, HemisphereFacingViewer) {
    Packing<double> p;
    p.geometry = Geometry::Spherical;
    p.n = 2;
    p.rows.push_back(cap_coords(make_cap<double>({1.0, 0.0, 0.0}, 0.0)));
    const auto r = render_spherical(p, RenderOptions{});
    ASSERT_EQ(count(r.svg, "<circle"), 2u);  // outline and cap boundary coincide
    const auto first = r.svg.find("<circle");
    const auto second = r.svg.find("<circle", first + 1);
    EXPECT_EQ(r.svg.substr(first, r.svg.find('>', first) - first),
              r.svg.substr(second, r.svg.find('>', second) - second));

    Packing<double> back = p;
    back.rows[0] = cap_coords(make_cap<double>({-0.6, 0.8, 0.0}, 1.0));
    const auto rb = render_spherical(back, RenderOptions{});
    EXPECT_EQ(count(rb.svg, "stroke-dasharray"), 1u);
    EXPECT_EQ(count(rb.svg, "<ellipse"), 1u);
}

TEST(Cli, Lox) {
    const auto r = cli({"lox", "--geometry", "spherical", "--seed=0,1,1,2", "--steps", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    const std::vector<std::string> want = {"0", "1", "1", "2", "8", "21"};
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(j["bends"][i], want[i]);
    EXPECT_TRUE(j["recurrence"].get<bool>());
}

TEST(Cli, GenIntegral) {
    const auto r = cli({"gen", "--geometry", "euclidean", "--seed=-1,2,2,3", "--max-bend", "100", "--mode", "exact"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream s(r.out);
    const auto p = read_packing<Exact>(s);
    EXPECT_GT(p.rows.size(), 50u);
    for (const auto& row : p.rows) EXPECT_TRUE(row[1].is_integer());
}

TEST(Cli, GenThreadsAgree) {
    const auto one = cli({"gen", "--seed=-1,2,2,3", "--max-bend", "300", "--threads", "1"});
    const auto four = cli({"gen", "--seed=-1,2,2,3", "--max-bend", "300", "--threads", "4", "--shuffle", "9"});
    ASSERT_EQ(one.code, 0);
    ASSERT_EQ(four.code, 0);
    // Same rows; the header's configuration count is also order independent.
    EXPECT_EQ(one.out, four.out);
}

TEST(Cli, GenLimit) {
    const auto r = cli({"gen", "--seed=0,0,1,1", "--max-bend", "5", "--max-configs", "1000"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("exceeded"), std::string::npos);
}

TEST(Cli, VerifyDocuments) {
    const std::string good = temp_path("good.json");
    write_file(good, format_document(config_to_json(figure3_seed<Exact>())));
    auto r = cli({"verify", "--in", good});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(Json::parse(r.out)["holds"].get<bool>());

    Json j = config_to_json(figure3_seed<Exact>());
    j["rows"][1][1] = "5";
    const std::string bad = temp_path("bad.json");
    write_file(bad, j.dump());
    r = cli({"verify", "--in", bad});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(Json::parse(r.out)["holds"].get<bool>());

    const std::string junk = temp_path("junk.json");
    write_file(junk, "{not json");
    EXPECT_EQ(cli({"verify", "--in", junk}).code, 1);
}

TEST(Cli, VerifyBends) {
    EXPECT_EQ(cli({"verify", "--seed=-1,2,2,3"}).code, 0);
    EXPECT_EQ(cli({"verify", "--seed=-1,2,2,4"}).code, 1);
    EXPECT_EQ(cli({"verify", "--geometry", "spherical", "--seed=0,1,1,2"}).code, 0);
    EXPECT_EQ(cli({"verify", "--geometry", "hyperbolic", "--seed=-2,3,5,6"}).code, 0);
    EXPECT_EQ(cli({"verify", "--mode", "float", "--seed=-1,2,2,3.0000000001"}).code, 0);
}

TEST(Cli, UsageErrors) {
    auto r = cli({"gen", "--bogus"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("Usage"), std::string::npos);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"gen", "--seed=-1,2,2,3"}).code, 2);  // no --max-bend
    EXPECT_EQ(cli({"verify"}).code, 2);
    EXPECT_EQ(cli({"verify", "--in", temp_path("missing.json")}).code, 2);
    EXPECT_EQ(cli({"render", "--seed=-1,2,2,3", "--cutoff", "2"}).code, 2);
    EXPECT_EQ(cli({"convert", "--seed=-1,2,2,3"}).code, 2);  // no --to
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, SolveAndConvert) {
    auto r = cli({"solve", "--geometry", "hyperbolic", "--seed=-2,3,5,6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto cfg = config_from_json<Exact>(Json::parse(r.out));
    EXPECT_TRUE(cfg.valid);
    EXPECT_EQ(cfg.config.bends(), vec<Exact>({-2, 3, 5, 6}));

    const std::string path = temp_path("hyp.json");
    write_file(path, r.out);
    r = cli({"convert", "--in", path, "--to", "spherical"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto s = config_from_json<Exact>(Json::parse(r.out));
    EXPECT_EQ(s.config.geometry, Geometry::Spherical);
    EXPECT_EQ(s.config.w, cfg.config.w * conversion_matrix<Exact>(Geometry::Hyperbolic, Geometry::Spherical, 2).matrix);

    EXPECT_EQ(cli({"solve", "--seed=1,1,1,1"}).code, 1);  // not a Descartes vector
}

TEST(Cli, SolveCompletesTangentRows) {
    const auto seed = figure3_seed<Exact>();
    Json j;
    j["geometry"] = "euclidean";
    j["rows"] = Json::array();
    for (std::size_t i = 1; i < 4; ++i) j["rows"].push_back(matrix_to_json(seed.w)[i]);
    const std::string path = temp_path("three.json");
    write_file(path, j.dump());
    const auto r = cli({"solve", "--in", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json out = Json::parse(r.out);
    ASSERT_EQ(out["completions"].size(), 2u);
    std::vector<Exact> fourth;
    for (const auto& doc : out["completions"]) {
        const auto c = config_from_json<Exact>(doc);
        EXPECT_TRUE(c.valid);
        fourth.push_back(c.config.w(3, 1));
    }
    std::sort(fourth.begin(), fourth.end());
    EXPECT_EQ(fourth, (std::vector<Exact>{q(-1), q(15)}));
}

TEST(Cli, RenderDeterministicAndOut) {
    const auto a = cli({"render", "--seed=-1,2,2,3", "--max-bend", "50"});
    const auto b = cli({"render", "--seed=-1,2,2,3", "--max-bend", "50"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("<?xml", 0), 0u);

    const std::string path = temp_path("fig.svg");
    const auto c = cli({"render", "--seed=-1,2,2,3", "--max-bend", "50", "--out", path});
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(c.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_EQ(buf.str(), a.out);
}

TEST(Cli, RenderFromPackingStream) {
    const auto g = cli({"gen", "--geometry", "hyperbolic", "--seed=-1,1,1,1", "--max-bend", "20"});
    ASSERT_EQ(g.code, 0) << g.err;
    const std::string path = temp_path("hyp.jsonl");
    write_file(path, g.out);
    const auto r = cli({"render", "--in", path, "--labels", "none"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find("<text"), std::string::npos);
    EXPECT_GT(count(r.out, "<circle"), 10u);
}

TEST(Cli, Onedim) {
    auto r = cli({"onedim", "--first", "0,1", "--second", "1,3"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["radii"], Json::parse(R"(["1/2","1","-3/2"])"));
    EXPECT_TRUE(j["holds"].get<bool>());
    EXPECT_EQ(j["shift"], "-3/2");

    r = cli({"onedim", "--first", "0,1", "--second", "1,3", "--reverse"});
    j = Json::parse(r.out);
    EXPECT_EQ(j["orientation"], "negative");
    EXPECT_TRUE(j["holds"].get<bool>());

    EXPECT_EQ(cli({"onedim", "--first", "0,1", "--second", "2,3"}).code, 1);
    EXPECT_EQ(cli({"onedim", "--first", "0,1"}).code, 2);
}
