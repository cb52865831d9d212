#pragma once

// JSON documents for configurations and JSON-lines streams for packings.
//
// Configuration document:
//   {"geometry": "euclidean", "n": 2, "mode": "exact", "rows": [["0", "-1", "0", "0"], ...]}
// Exact scalars are strings ("p/q" in lowest terms, or "a+b*sqrt(d)");
// float scalars are JSON numbers.  Float documents also accept strings.
//
// Packing stream: a header object with "type": "packing", then one
// {"row": [...]} object per line in canonical row order.

#include <iosfwd>
#include <variant>

#include <json.hpp>

#include "descartes/apollonian.hpp"
#include "descartes/forms.hpp"

namespace descartes {

using Json = nlohmann::ordered_json;

enum class Mode { Exact, Float };

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

/// Malformed input: wrong shape, unknown tags, unparsable scalars.
class DocumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input describing something invalid.
class ValidationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <Scalar T>
Json scalar_to_json(const T& x);

/// Exact: strings, or JSON integers.  Float: numbers, or strings in the
/// exact syntax.
template <Scalar T>
T scalar_from_json(const Json& j);

template <Scalar T>
T parse_scalar(std::string_view text);

template <> Exact parse_scalar<Exact>(std::string_view);
template <> double parse_scalar<double>(std::string_view);
template <> Json scalar_to_json<Exact>(const Exact&);
template <> Json scalar_to_json<double>(const double&);
template <> Exact scalar_from_json<Exact>(const Json&);
template <> double scalar_from_json<double>(const Json&);

/// Comma-separated scalars, e.g. "-1,2,2,3".
template <Scalar T>
Vec<T> parse_scalar_list(std::string_view text);

template <Scalar T>
Json matrix_to_json(const Matrix<T>& m);

template <Scalar T>
Matrix<T> matrix_from_json(const Json& j);

template <Scalar T>
Json config_to_json(const ConfigMatrix<T>& cfg);

template <Scalar T>
struct ParsedConfig {
    ConfigMatrix<T> config;
    Residual<T> residual;
    bool valid = false;
};

/// Strict parsing throws ValidationError when the Gram identity fails;
/// lenient parsing returns the configuration with valid = false.
template <Scalar T>
ParsedConfig<T> config_from_json(const Json& j, bool strict = true, double tol = kDefaultTolerance);

/// Mode named by a configuration document or packing header (default exact).
Mode document_mode(const Json& j);

bool is_packing_header(const Json& j);

/// Pretty form of a document: one key per line, one matrix row per line.
std::string format_document(const Json& j);

template <Scalar T>
void write_packing(std::ostream& os, const Packing<T>& p);

/// Reads what write_packing wrote.  Only rows, seed and header fields are
/// restored; `configs` comes back empty.
template <Scalar T>
Packing<T> read_packing(std::istream& is);

}  // namespace descartes
