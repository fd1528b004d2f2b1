#include "gendet/matrix_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace gendet::io {

MatrixFormat parse_format_name(std::string_view name) {
    if (name == "csv") return MatrixFormat::Csv;
    if (name == "json") return MatrixFormat::Json;
    if (name == "auto") return MatrixFormat::Auto;
    throw ParseError("unknown matrix format '" + std::string(name) + "' (expected csv, json, or auto)");
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

template <Scalar S>
MatrixX<S> matrix_from_csv(std::string_view text) {
    std::vector<std::vector<S>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<S> row;
        for (const std::string& field : split_fields(line)) {
            try {
                row.push_back(parse_scalar<S>(field));
            } catch (const ParseError& e) {
                throw ParseError("CSV line " + std::to_string(line_number) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("CSV line " + std::to_string(line_number) + " has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("CSV input contains no matrix rows");

    MatrixX<S> out(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < out.rows(); ++i)
        for (Index j = 0; j < out.cols(); ++j)
            out(i, j) = std::move(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return out;
}

template <Scalar S>
MatrixX<S> read_matrix_source(const std::string& path, MatrixFormat format) {
    if (path.empty() || path == "-") return read_matrix<S>(std::cin, format);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_matrix<S>(in, format);
}

template MatrixX<Rational> matrix_from_csv<Rational>(std::string_view);
template MatrixX<double> matrix_from_csv<double>(std::string_view);
template MatrixX<Rational> read_matrix_source<Rational>(const std::string&, MatrixFormat);
template MatrixX<double> read_matrix_source<double>(const std::string&, MatrixFormat);

} // namespace gendet::io
