#include "descartes/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "descartes/apollonian.hpp"
#include "descartes/completion.hpp"
#include "descartes/io.hpp"
#include "descartes/onedim.hpp"
#include "descartes/render.hpp"
#include "descartes/seeds.hpp"
#include "descartes/transform.hpp"

namespace descartes {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::string> mode;
    double tol = kDefaultTolerance;
    std::string in;
    std::string out;
    std::string geometry = "euclidean";
    std::optional<std::string> seed;
    unsigned threads = 1;

    // gen / render
    std::optional<std::string> max_bend;
    std::optional<std::string> euclid_bound;
    std::size_t max_configs = 4'000'000;
    std::optional<std::uint64_t> shuffle;
    bool verify_each = false;

    // convert
    std::string to;

    // lox
    std::size_t steps = 10;

    // render
    int width = 800;
    int height = 800;
    double cutoff = 1.0 / 400;
    std::string labels = "bend";
    double stroke = 1.0;
    std::string projection = "orthographic";

    // onedim
    std::optional<std::string> first;
    std::optional<std::string> second;
    bool reverse = false;
};

struct Input {
    bool present = false;
    bool packing = false;
    std::string text;
    Json doc;  // configuration document or packing header
};

struct Context {
    const Options& opt;
    const Input& input;
    std::ostream& out;
    std::ostream& err;
};

Input load_input(const std::string& path) {
    Input in;
    if (path.empty()) return in;
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot open '" + path + "'");
        buf << f.rdbuf();
    }
    in.present = true;
    in.text = buf.str();
    const std::string first_line = in.text.substr(0, in.text.find('\n'));
    try {
        Json head = Json::parse(first_line, nullptr, false);
        if (!head.is_discarded() && is_packing_header(head)) {
            in.packing = true;
            in.doc = std::move(head);
            return in;
        }
        in.doc = Json::parse(in.text);
    } catch (const Json::parse_error& e) {
        throw DocumentError("'" + path + "' is not valid JSON: " + e.what());
    }
    return in;
}

Geometry geometry_option(const std::string& text) {
    auto g = parse_geometry(text);
    if (!g) throw UsageError("unknown geometry '" + text + "'");
    return *g;
}

template <Scalar T>
Vec<T> seed_bends(const Options& opt) {
    Vec<T> b = parse_scalar_list<T>(*opt.seed);
    if (b.size() < 3) throw UsageError("--seed needs at least 3 bends");
    return b;
}

// The configuration named by --in or --seed.
template <Scalar T>
ConfigMatrix<T> input_config(const Context& c, bool strict = true) {
    if (c.input.present) {
        if (c.input.packing) {
            std::istringstream s(c.input.text);
            return read_packing<T>(s).seed;
        }
        return config_from_json<T>(c.input.doc, strict, c.opt.tol).config;
    }
    if (!c.opt.seed) throw UsageError("give a configuration with --in or bends with --seed");
    const Vec<T> b = seed_bends<T>(c.opt);
    return realize_bends<T>(geometry_option(c.opt.geometry), b.size() - 2, b, c.opt.tol);
}

template <Scalar T>
Packing<T> input_packing(const Context& c) {
    std::istringstream s(c.input.text);
    return read_packing<T>(s);
}

template <Scalar T>
int cmd_verify(const Context& c) {
    Json report;
    bool holds = false;
    if (c.input.present) {
        if (c.input.packing) throw UsageError("verify takes a configuration document, not a packing");
        const ParsedConfig<T> p = config_from_json<T>(c.input.doc, false, c.opt.tol);
        const auto& cfg = p.config;
        report["geometry"] = std::string(to_string(cfg.geometry));
        report["n"] = cfg.n;
        report["mode"] = ScalarTraits<T>::mode_name;
        report["holds"] = p.valid;
        report["max_residual"] = scalar_to_json(p.residual.max_abs_entry_error);
        report["gram"] = matrix_to_json(gram(cfg.w, descartes_form<T>(cfg.n)));
        report["target"] = matrix_to_json(gram_target<T>(cfg.geometry, cfg.n).matrix);
        holds = p.valid;
    } else if (c.opt.seed) {
        const Vec<T> b = seed_bends<T>(c.opt);
        const std::size_t n = b.size() - 2;
        const Geometry g = geometry_option(c.opt.geometry);
        const std::size_t k = g == Geometry::Euclidean ? 1 : 0;
        const T value = bilinear(b, descartes_form<T>(n).matrix, b);
        const T expected = gram_target<T>(g, n).matrix(k, k);
        holds = ScalarTraits<T>::is_zero(value - expected, c.opt.tol);
        report["geometry"] = std::string(to_string(g));
        report["n"] = n;
        report["mode"] = ScalarTraits<T>::mode_name;
        report["holds"] = holds;
        Json bends = Json::array();
        for (const auto& x : b) bends.push_back(scalar_to_json(x));
        report["bends"] = std::move(bends);
        report["value"] = scalar_to_json(value);
        report["expected"] = scalar_to_json(expected);
    } else {
        throw UsageError("verify needs --in or --seed");
    }
    c.out << format_document(report);
    return holds ? kExitOk : kExitInvalid;
}

template <Scalar T>
int cmd_solve(const Context& c) {
    if (!c.input.present) {
        c.out << format_document(config_to_json(input_config<T>(c)));
        return kExitOk;
    }
    if (c.input.packing) throw UsageError("solve takes a configuration document");
    const Json& doc = c.input.doc;
    if (!doc.is_object() || !doc.contains("rows")) throw DocumentError("document has no \"rows\"");
    const Matrix<T> given = matrix_from_json<T>(doc["rows"]);
    if (given.rows() + 1 != given.cols())
        throw DocumentError("solve expects n+1 rows of length n+2, got " + given.shape());
    const std::size_t n = given.cols() - 2;
    const Geometry g = doc.contains("geometry") ? geometry_option(doc["geometry"].get<std::string>())
                                                : geometry_option(c.opt.geometry);
    std::vector<Vec<T>> rows;
    for (std::size_t i = 0; i < given.rows(); ++i) rows.push_back(given.row(i));
    Json result;
    result["completions"] = Json::array();
    for (auto& extra : complete_rows(row_form<T>(g, n), rows, c.opt.tol)) {
        std::vector<Vec<T>> all = rows;
        all.push_back(std::move(extra));
        result["completions"].push_back(config_to_json(ConfigMatrix<T>(g, n, Matrix<T>::from_rows(all))));
    }
    c.out << format_document(result);
    return kExitOk;
}

template <Scalar T>
GenerateOptions<T> generate_options(const Context& c, const ConfigMatrix<T>& seed, bool bound_required) {
    GenerateOptions<T> go;
    go.tol = c.opt.tol;
    go.threads = c.opt.threads;
    go.max_configs = c.opt.max_configs;
    go.shuffle_seed = c.opt.shuffle;
    go.verify_each = c.opt.verify_each;
    if (c.opt.max_bend) {
        go.bound = parse_scalar<T>(*c.opt.max_bend);
    } else if (bound_required) {
        throw UsageError("--max-bend is required");
    } else {
        // Seed only.
        for (const auto& b : seed.bends()) go.bound = std::max(go.bound, ScalarTraits<T>::abs(b));
        go.max_depth = 0;
    }
    if (c.opt.euclid_bound)
        go.euclid_bound = parse_scalar<T>(*c.opt.euclid_bound);
    else if (seed.geometry == Geometry::Hyperbolic)
        go.euclid_bound = go.bound;  // horocycles all have coth 1; this keeps the set finite
    return go;
}

template <Scalar T>
int cmd_gen(const Context& c) {
    const ConfigMatrix<T> seed = input_config<T>(c);
    const Packing<T> p = generate(seed, generate_options(c, seed, true));
    write_packing(c.out, p);
    return kExitOk;
}

template <Scalar T>
int cmd_convert(const Context& c) {
    if (c.opt.to.empty()) throw UsageError("convert needs --to");
    const Geometry to = geometry_option(c.opt.to);
    if (c.input.packing) {
        write_packing(c.out, convert_packing(input_packing<T>(c), to));
        return kExitOk;
    }
    c.out << format_document(config_to_json(convert_matrix(input_config<T>(c), to, c.opt.tol)));
    return kExitOk;
}

template <Scalar T>
int cmd_lox(const Context& c) {
    const ConfigMatrix<T> seed = input_config<T>(c);
    const LoxodromicSequence<T> seq = loxodromic(seed, c.opt.steps);
    Json j;
    j["geometry"] = std::string(to_string(seed.geometry));
    j["n"] = seed.n;
    j["mode"] = ScalarTraits<T>::mode_name;
    j["steps"] = c.opt.steps;
    Json bends = Json::array();
    for (const auto& b : seq.bends) bends.push_back(scalar_to_json(b));
    j["bends"] = std::move(bends);
    j["recurrence"] = recurrence_check(seq, c.opt.tol);
    c.out << format_document(j);
    return kExitOk;
}

RenderOptions render_options(const Options& opt) {
    RenderOptions ro;
    ro.width = opt.width;
    ro.height = opt.height;
    ro.cutoff = opt.cutoff;
    ro.stroke = opt.stroke;
    auto labels = parse_label_mode(opt.labels);
    if (!labels) throw UsageError("--labels must be bend or none");
    ro.labels = *labels;
    auto projection = parse_projection(opt.projection);
    if (!projection) throw UsageError("--projection must be orthographic or stereographic");
    ro.projection = *projection;
    try {
        ro.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return ro;
}

template <Scalar T>
int cmd_render(const Context& c) {
    const RenderOptions ro = render_options(c.opt);
    Packing<T> p;
    if (c.input.packing) {
        p = input_packing<T>(c);
    } else {
        const ConfigMatrix<T> seed = input_config<T>(c);
        p = generate(seed, generate_options(c, seed, false));
    }
    const RenderResult r = render(p, ro);
    if (r.skipped_virtual > 0) c.err << "warning: skipped " << r.skipped_virtual << " virtual rows\n";
    c.out << r.svg;
    return kExitOk;
}

template <Scalar T>
OrientedInterval<T> interval_option(const std::string& text) {
    const Vec<T> v = parse_scalar_list<T>(text);
    if (v.size() != 2) throw UsageError("an interval is two comma-separated endpoints, got '" + text + "'");
    return make_interval(v[0], v[1]);
}

template <Scalar T>
int cmd_onedim(const Context& c) {
    OneDimConfig<T> cfg;
    if (c.input.present) {
        if (c.input.packing || !c.input.doc.contains("rows")) throw UsageError("onedim --in takes a 3x3 document");
        cfg = config_from_augmented_1d(matrix_from_json<T>(c.input.doc["rows"]), c.opt.tol);
    } else {
        if (!c.opt.first || !c.opt.second) throw UsageError("onedim needs --first and --second, or --in");
        cfg = complete_line(interval_option<T>(*c.opt.first), interval_option<T>(*c.opt.second));
    }
    if (c.opt.reverse) cfg = reversed(cfg);

    const Residual<T> res = check_identity(cfg.w, descartes_form<T>(1), gram_target<T>(Geometry::Euclidean, 1), c.opt.tol);
    Json j;
    j["mode"] = ScalarTraits<T>::mode_name;
    j["orientation"] = cfg.negative ? "negative" : "positive";
    j["intervals"] = Json::array();
    for (const auto& iv : cfg.intervals) {
        Json e;
        e["lo"] = scalar_to_json(iv.lo);
        e["hi"] = scalar_to_json(iv.hi);
        e["infinite"] = iv.infinite;
        j["intervals"].push_back(std::move(e));
    }
    Json radii = Json::array(), curv = Json::array();
    for (const auto& r : cfg.radii()) radii.push_back(scalar_to_json(r));
    for (const auto& a : cfg.curvatures()) curv.push_back(scalar_to_json(a));
    j["radii"] = std::move(radii);
    j["curvatures"] = std::move(curv);
    j["descartes_1d"] = scalar_to_json(descartes_1d_check(cfg.curvatures()));
    j["shift"] = scalar_to_json(reflection_shift(cfg.intervals[2]));
    j["rows"] = matrix_to_json(cfg.w);
    j["gram"] = matrix_to_json(gram(cfg.w, descartes_form<T>(1)));
    j["holds"] = res.holds;
    c.out << format_document(j);
    return res.holds ? kExitOk : kExitInvalid;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--mode", opt.mode, "Arithmetic: exact or float (default: the document's, else exact)")
        ->check(CLI::IsMember({"exact", "rational", "float"}));
    sub->add_option("--tol", opt.tol, "Float-mode tolerance per matrix entry")->capture_default_str();
    sub->add_option("--in", opt.in, "Input document (- for stdin)");
    sub->add_option("--out", opt.out, "Write the result here instead of stdout");
}

void add_seed(CLI::App* sub, Options& opt) {
    sub->add_option("--geometry", opt.geometry, "euclidean, spherical or hyperbolic")
        ->check(CLI::IsMember({"euclidean", "spherical", "hyperbolic"}))
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "Comma-separated bends, e.g. \"-1,2,2,3\"");
}

void add_generation(CLI::App* sub, Options& opt) {
    sub->add_option("--max-bend", opt.max_bend, "Keep spheres with |bend| at most this");
    sub->add_option("--euclid-bound", opt.euclid_bound,
                    "Also bound the planar bend (default for hyperbolic: --max-bend)");
    sub->add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--max-configs", opt.max_configs, "Abort beyond this many configurations")->capture_default_str();
    sub->add_option("--shuffle", opt.shuffle, "Shuffle each BFS level with this RNG seed");
    sub->add_flag("--verify-each", opt.verify_each, "Check the Gram identity of every configuration");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Descartes configurations and Apollonian packings in exact arithmetic", "descartes"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check a configuration's Gram identity or a bend vector's Descartes relation");
    add_common(verify, opt);
    add_seed(verify, opt);

    auto* solve = app.add_subcommand("solve", "Build a configuration from bends, or complete n+1 tangent spheres");
    add_common(solve, opt);
    add_seed(solve, opt);

    auto* gen = app.add_subcommand("gen", "Generate a packing as JSON lines");
    add_common(gen, opt);
    add_seed(gen, opt);
    add_generation(gen, opt);

    auto* convert = app.add_subcommand("convert", "Change the geometry of a configuration or packing");
    add_common(convert, opt);
    add_seed(convert, opt);
    convert->add_option("--to", opt.to, "Target geometry")
        ->check(CLI::IsMember({"euclidean", "spherical", "hyperbolic"}))
        ->required();

    auto* lox = app.add_subcommand("lox", "Bends obtained by repeatedly reflecting the largest sphere");
    add_common(lox, opt);
    add_seed(lox, opt);
    lox->add_option("--steps", opt.steps, "Number of reflections")->capture_default_str();

    auto* render_cmd = app.add_subcommand("render", "Draw a planar packing as SVG");
    add_common(render_cmd, opt);
    add_seed(render_cmd, opt);
    add_generation(render_cmd, opt);
    render_cmd->add_option("--width", opt.width, "Canvas width in px")->capture_default_str();
    render_cmd->add_option("--height", opt.height, "Canvas height in px")->capture_default_str();
    render_cmd->add_option("--cutoff", opt.cutoff, "Smallest drawn radius as a fraction of the canvas")
        ->capture_default_str();
    render_cmd->add_option("--labels", opt.labels, "bend or none")->capture_default_str();
    render_cmd->add_option("--stroke", opt.stroke, "Stroke width in px")->capture_default_str();
    render_cmd->add_option("--projection", opt.projection, "Spherical view: orthographic or stereographic")
        ->capture_default_str();

    auto* onedim = app.add_subcommand("onedim", "One-dimensional configuration from two touching intervals");
    add_common(onedim, opt);
    onedim->add_option("--first", opt.first, "First interval \"a,b\"");
    onedim->add_option("--second", opt.second, "Second interval \"c,d\"");
    onedim->add_flag("--reverse", opt.reverse, "Negative orientation (all signs reversed)");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("descartes");
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        if (code == 0) return kExitOk;
        const CLI::App* failed = &app;
        for (const auto* sub : app.get_subcommands()) failed = sub;
        err << failed->help();
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        const Input input = load_input(opt.in);
        Mode mode = Mode::Exact;
        if (opt.mode)
            mode = *parse_mode(*opt.mode);
        else if (input.present)
            mode = document_mode(input.doc);
        const Context ctx{opt, input, buffer, err};
        auto pick = [&](auto exact, auto floating) { return mode == Mode::Exact ? exact(ctx) : floating(ctx); };
        if (*verify) code = pick(cmd_verify<Exact>, cmd_verify<double>);
        else if (*solve) code = pick(cmd_solve<Exact>, cmd_solve<double>);
        else if (*gen) code = pick(cmd_gen<Exact>, cmd_gen<double>);
        else if (*convert) code = pick(cmd_convert<Exact>, cmd_convert<double>);
        else if (*lox) code = pick(cmd_lox<Exact>, cmd_lox<double>);
        else if (*render_cmd) code = pick(cmd_render<Exact>, cmd_render<double>);
        else if (*onedim) code = pick(cmd_onedim<Exact>, cmd_onedim<double>);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    if (opt.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << opt.out << "'\n";
            return kExitUsage;
        }
        f << buffer.str();
    }
    return code;
}

}  // namespace descartes
