#pragma once

/*
 * Matrix ingestion and emission.
 *
 * Two wire formats, one per-entry scalar grammar:
 *   CSV  — one matrix row per line, comma-separated literals. Shape is
 *          inferred; ragged rows are a ParseError.
 *   JSON — {"rows": m, "cols": n, "data": [row-major entries]} where each
 *          entry is a number or a "p/q" string. Declared shape is checked
 *          against the data length.
 *
 * The exact domain accepts integers and "p/q" literals only; JSON numbers
 * with a fractional part have no canonical rational reading and are
 * rejected rather than guessed at. Exact values always serialize as
 * strings ("p" or "p/q"), never as JSON numbers, so a JSON round trip is
 * bit-identical.
 */

#include <istream>
#include <string>
#include <string_view>

#include <json.hpp>

#include <Eigen/Core>

#include "gendet/errors.hpp"
#include "gendet/scalar.hpp"

namespace gendet::io {

enum class MatrixFormat { Csv, Json, Auto };

/// "csv" | "json" | "auto" (case-sensitive, matching the CLI flag values).
MatrixFormat parse_format_name(std::string_view name);

/// JSON form of one scalar: exact values as "p/q" strings, doubles as numbers.
inline nlohmann::json scalar_to_json(const Rational& v) { return to_string(v); }
inline nlohmann::json scalar_to_json(double v) { return v; }

namespace detail {

template <Scalar S>
S scalar_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_scalar<S>(v.get<std::string>());
    if constexpr (is_exact_v<S>) {
        if (v.is_number_integer()) return S(static_cast<long long>(v.get<std::int64_t>()));
        if (v.is_number_unsigned()) {
            const auto u = v.get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(INT64_MAX))
                return parse_scalar<S>(v.dump()); // rare: route through the text parser
            return S(static_cast<long long>(u));
        }
        if (v.is_number_float())
            throw ParseError("exact matrix entry " + v.dump() +
                             " is a fractional JSON number; write it as a \"p/q\" string");
        throw ParseError("matrix entry " + v.dump() + " is not a scalar");
    } else {
        if (v.is_number()) return v.get<double>();
        throw ParseError("matrix entry " + v.dump() + " is not a scalar");
    }
}

} // namespace detail

/// Parses CSV text (one row per line) into a matrix. Blank lines are
/// skipped; ragged or empty input is a ParseError.
template <Scalar S>
MatrixX<S> matrix_from_csv(std::string_view text);

/// Parses the {"rows","cols","data"} object form.
template <Scalar S>
MatrixX<S> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix JSON must be an object with rows, cols, and data");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
        throw ParseError("matrix JSON rows/cols must be integers");
    const auto rows = j["rows"].get<std::int64_t>();
    const auto cols = j["cols"].get<std::int64_t>();
    if (rows < 1 || cols < 1)
        throw ParseError("matrix JSON shape must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
    const auto& data = j["data"];
    if (!data.is_array() || static_cast<std::int64_t>(data.size()) != rows * cols)
        throw ParseError("matrix JSON data length " +
                         std::to_string(data.is_array() ? data.size() : 0) + " does not match " +
                         std::to_string(rows) + "x" + std::to_string(cols));
    MatrixX<S> out(rows, cols);
    std::int64_t k = 0;
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::int64_t c = 0; c < cols; ++c) out(i, c) = detail::scalar_from_json<S>(data[static_cast<std::size_t>(k++)]);
    return out;
}

template <Scalar S>
MatrixX<S> matrix_from_json_text(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid matrix JSON: ") + e.what());
    }
    return matrix_from_json<S>(j);
}

/// Row-major {"rows","cols","data"} emission; exact entries as strings.
template <typename Derived>
nlohmann::json matrix_to_json(const Eigen::MatrixBase<Derived>& a) {
    nlohmann::json data = nlohmann::json::array();
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            data.push_back(scalar_to_json(a.derived()(i, j)));
    return nlohmann::json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

/// CSV emission, one row per line, entries in round-trippable form.
template <typename Derived>
std::string matrix_to_csv(const Eigen::MatrixBase<Derived>& a) {
    std::string out;
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_scalar(a.derived()(i, j));
        }
        out += '\n';
    }
    return out;
}

/// Reads a whole stream and parses it; Auto sniffs JSON by a leading '{'.
template <Scalar S>
MatrixX<S> read_matrix(std::istream& in, MatrixFormat format) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    if (format == MatrixFormat::Auto) {
        const auto first = text.find_first_not_of(" \t\r\n");
        format = (first != std::string::npos && text[first] == '{') ? MatrixFormat::Json
                                                                    : MatrixFormat::Csv;
    }
    if (format == MatrixFormat::Json) return matrix_from_json_text<S>(text);
    return matrix_from_csv<S>(text);
}

/// Reads from a file path, or standard input when path is "-".
template <Scalar S>
MatrixX<S> read_matrix_source(const std::string& path, MatrixFormat format);

extern template MatrixX<Rational> matrix_from_csv<Rational>(std::string_view);
extern template MatrixX<double> matrix_from_csv<double>(std::string_view);
extern template MatrixX<Rational> read_matrix_source<Rational>(const std::string&, MatrixFormat);
extern template MatrixX<double> read_matrix_source<double>(const std::string&, MatrixFormat);

} // namespace gendet::io
