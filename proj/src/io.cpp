#include "descartes/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>

namespace descartes {

std::string_view to_string(Mode m) {
    return m == Mode::Exact ? "exact" : "float";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "exact" || text == "rational") return Mode::Exact;
    if (text == "float") return Mode::Float;
    return std::nullopt;
}

namespace {

// "12.375" -> 12375/1000, exactly.
std::optional<Exact> parse_decimal(std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) return std::nullopt;
    std::string digits(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) return std::nullopt;
    digits += frac;
    if (digits == "-" || digits == "+" || digits.empty()) return std::nullopt;
    std::string den = "1" + std::string(frac.size(), '0');
    return Exact::parse(digits + "/" + den);
}

std::string describe(const Json& j) {
    std::string s = j.dump();
    return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

}  // namespace

template <>
Exact parse_scalar<Exact>(std::string_view text) {
    try {
        if (auto d = parse_decimal(text)) return *d;
        return Exact::parse(text);
    } catch (const std::exception& e) {
        throw DocumentError("cannot parse exact scalar '" + std::string(text) + "': " + e.what());
    }
}

template <>
double parse_scalar<double>(std::string_view text) {
    std::string_view t = text;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    double v = 0;
    auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec == std::errc() && end == t.data() + t.size()) return v;
    return parse_scalar<Exact>(text).to_double();
}

template <Scalar T>
Vec<T> parse_scalar_list(std::string_view text) {
    Vec<T> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw DocumentError("empty entry in list '" + std::string(text) + "'");
        out.push_back(parse_scalar<T>(item));
        start = comma + 1;
    }
    return out;
}

template <>
Json scalar_to_json<Exact>(const Exact& x) {
    return x.str();
}

template <>
Json scalar_to_json<double>(const double& x) {
    return x;
}

template <>
Exact scalar_from_json<Exact>(const Json& j) {
    if (j.is_string()) return parse_scalar<Exact>(j.get<std::string>());
    if (j.is_number_integer()) return Exact(j.get<long long>());
    throw DocumentError("exact scalars must be strings or integers, got " + describe(j));
}

template <>
double scalar_from_json<double>(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_scalar<double>(j.get<std::string>());
    throw DocumentError("expected a number, got " + describe(j));
}

template <Scalar T>
Json matrix_to_json(const Matrix<T>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar T>
Matrix<T> matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw DocumentError("expected a non-empty array of rows");
    std::vector<Vec<T>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw DocumentError("row is not an array: " + describe(r));
        Vec<T> row;
        for (const auto& x : r) row.push_back(scalar_from_json<T>(x));
        if (!rows.empty() && row.size() != rows.front().size()) throw DocumentError("rows have different lengths");
        rows.push_back(std::move(row));
    }
    return Matrix<T>::from_rows(rows);
}

template <Scalar T>
Json config_to_json(const ConfigMatrix<T>& cfg) {
    Json j;
    j["geometry"] = std::string(to_string(cfg.geometry));
    j["n"] = cfg.n;
    j["mode"] = ScalarTraits<T>::mode_name;
    j["rows"] = matrix_to_json(cfg.w);
    return j;
}

namespace {

Geometry geometry_field(const Json& j) {
    if (!j.contains("geometry")) return Geometry::Euclidean;
    if (!j["geometry"].is_string()) throw DocumentError("\"geometry\" must be a string");
    auto g = parse_geometry(j["geometry"].get<std::string>());
    if (!g) throw DocumentError("unknown geometry '" + j["geometry"].get<std::string>() + "'");
    return *g;
}

}  // namespace

template <Scalar T>
ParsedConfig<T> config_from_json(const Json& j, bool strict, double tol) {
    if (!j.is_object()) throw DocumentError("configuration document must be a JSON object");
    if (!j.contains("rows")) throw DocumentError("configuration document has no \"rows\"");
    const Geometry g = geometry_field(j);
    Matrix<T> w = matrix_from_json<T>(j["rows"]);
    if (w.rows() < 3) throw DocumentError("need at least 3 rows");
    std::size_t n = w.rows() - 2;
    if (j.contains("n")) {
        if (!j["n"].is_number_unsigned()) throw DocumentError("\"n\" must be a positive integer");
        n = j["n"].get<std::size_t>();
    }
    if (w.rows() != n + 2 || w.cols() != n + 2)
        throw DocumentError("expected a " + std::to_string(n + 2) + "x" + std::to_string(n + 2) + " matrix for n = " +
                            std::to_string(n) + ", got " + w.shape());
    ParsedConfig<T> out;
    out.config = ConfigMatrix<T>(g, n, std::move(w));
    out.residual = check_identity(out.config, tol);
    out.valid = out.residual.holds;
    if (strict && !out.valid)
        throw ValidationError("configuration violates the " + std::string(to_string(g)) +
                              " Gram identity (max residual " + to_text(out.residual.max_abs_entry_error) + ")");
    return out;
}

Mode document_mode(const Json& j) {
    if (!j.is_object() || !j.contains("mode")) return Mode::Exact;
    if (!j["mode"].is_string()) throw DocumentError("\"mode\" must be a string");
    auto m = parse_mode(j["mode"].get<std::string>());
    if (!m) throw DocumentError("unknown mode '" + j["mode"].get<std::string>() + "'");
    return *m;
}

bool is_packing_header(const Json& j) {
    return j.is_object() && j.contains("type") && j["type"] == "packing";
}

namespace {

bool is_matrix(const Json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& r : j)
        if (!r.is_array()) return false;
    return true;
}

void format_value(std::string& out, const Json& j, int indent) {
    const std::string pad(indent, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out += pad + "  " + Json(key).dump() + ": ";
            format_value(out, value, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    } else if (j.is_array() && !j.empty() && (is_matrix(j) || j.front().is_object())) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad + "  ";
            format_value(out, j[i], indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += pad + "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string format_document(const Json& j) {
    std::string out;
    format_value(out, j, 0);
    out += '\n';
    return out;
}

template <Scalar T>
void write_packing(std::ostream& os, const Packing<T>& p) {
    Json h;
    h["type"] = "packing";
    h["geometry"] = std::string(to_string(p.geometry));
    h["n"] = p.n;
    h["mode"] = ScalarTraits<T>::mode_name;
    h["bound"] = scalar_to_json(p.bound);
    h["euclid_bound"] = p.euclid_bound ? scalar_to_json(*p.euclid_bound) : Json(nullptr);
    h["depth"] = p.depth;
    h["configs"] = p.configs.size();
    h["rows"] = p.rows.size();
    h["combinatorial_only"] = p.combinatorial_only;
    h["seed"] = matrix_to_json(p.seed.w);
    os << h.dump() << '\n';
    for (const auto& r : p.rows) {
        Json line;
        Json entries = Json::array();
        for (const auto& x : r.entries) entries.push_back(scalar_to_json(x));
        line["row"] = std::move(entries);
        os << line.dump() << '\n';
    }
}

template <Scalar T>
Packing<T> read_packing(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw DocumentError("empty packing stream");
    Json h;
    try {
        h = Json::parse(line);
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string("bad packing header: ") + e.what());
    }
    if (!is_packing_header(h)) throw DocumentError("first line is not a packing header");
    Packing<T> p;
    try {
        p.geometry = geometry_field(h);
        p.n = h.at("n").get<std::size_t>();
        p.bound = scalar_from_json<T>(h.at("bound"));
        if (h.contains("euclid_bound") && !h["euclid_bound"].is_null()) p.euclid_bound = scalar_from_json<T>(h["euclid_bound"]);
        p.depth = h.value("depth", std::size_t{0});
        p.combinatorial_only = h.value("combinatorial_only", p.n >= 4);
        p.seed = ConfigMatrix<T>(p.geometry, p.n, matrix_from_json<T>(h.at("seed")));
    } catch (const Json::exception& e) {
        throw DocumentError(std::string("bad packing header: ") + e.what());
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const Json::parse_error& e) {
            throw DocumentError(std::string("bad packing row: ") + e.what());
        }
        if (!j.contains("row")) throw DocumentError("packing line without \"row\"");
        Vec<T> row;
        for (const auto& x : j["row"]) row.push_back(scalar_from_json<T>(x));
        if (row.size() != p.n + 2) throw DocumentError("packing row has the wrong length");
        p.rows.push_back({std::move(row), p.geometry});
    }
    return p;
}

#define DESCARTES_INSTANTIATE(T)                                                       \
    template Vec<T> parse_scalar_list<T>(std::string_view);                            \
    template Json matrix_to_json<T>(const Matrix<T>&);                                 \
    template Matrix<T> matrix_from_json<T>(const Json&);                               \
    template Json config_to_json<T>(const ConfigMatrix<T>&);                           \
    template ParsedConfig<T> config_from_json<T>(const Json&, bool, double);           \
    template void write_packing<T>(std::ostream&, const Packing<T>&);                  \
    template Packing<T> read_packing<T>(std::istream&);

DESCARTES_INSTANTIATE(double)
DESCARTES_INSTANTIATE(Exact)
#undef DESCARTES_INSTANTIATE

}  // namespace descartes
