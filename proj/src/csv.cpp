#include "rebalance/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace rebalance {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Lines split on '\n'; a single trailing '\r' per line is tolerated and a
// final newline does not produce a phantom empty line.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

double parse_feature(const std::string& cell, std::size_t row, std::size_t column) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(column) +
                             ": not a number: '" + cell + "'",
                         row, column);
    if (!std::isfinite(value))
        throw ParseError("row " + std::to_string(row) + ", column " + std::to_string(column) +
                             ": non-finite value '" + cell + "'",
                         row, column);
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

Dataset parse_csv(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ShapeError("empty csv input");

    const auto header = split_fields(lines[0]);
    if (header.size() < 2)
        throw ShapeError("header must list at least one feature and the label column");
    const std::size_t n_features = header.size() - 1;
    for (std::size_t j = 0; j < n_features; ++j) {
        const std::string expected = "f" + std::to_string(j);
        if (header[j] != expected)
            throw ParseError("row 1, column " + std::to_string(j + 1) + ": expected header '" +
                                 expected + "', got '" + header[j] + "'",
                             1, j + 1);
    }
    if (header.back() != "label")
        throw ParseError("row 1, column " + std::to_string(header.size()) +
                             ": expected header 'label', got '" + header.back() + "'",
                         1, header.size());

    std::vector<double> values;
    std::vector<std::string> labels;
    values.reserve((lines.size() - 1) * n_features);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t row = i + 1;  // 1-based file row; the header is row 1
        const auto fields = split_fields(lines[i]);
        if (fields.size() != n_features + 1)
            throw ShapeError("row " + std::to_string(row) + " has " +
                             std::to_string(fields.size()) + " cells, expected " +
                             std::to_string(n_features + 1));
        for (std::size_t j = 0; j < n_features; ++j)
            values.push_back(parse_feature(fields[j], row, j + 1));
        if (fields.back().empty())
            throw ParseError("row " + std::to_string(row) + ", column " +
                                 std::to_string(n_features + 1) + ": empty label",
                             row, n_features + 1);
        labels.push_back(fields.back());
    }
    return Dataset(n_features, std::move(values), std::move(labels));
}

std::string to_csv_string(const Dataset& d) {
    std::ostringstream out;
    for (std::size_t j = 0; j < d.n_features(); ++j) out << 'f' << j << ',';
    out << "label\n";
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        const auto row = d.row(i);
        for (double v : row) out << format_double(v) << ',';
        out << d.label(i) << '\n';
    }
    return out.str();
}

Dataset read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path + "'");
    return parse_csv(buffer.str());
}

void write_csv(const Dataset& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << to_csv_string(d);
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace rebalance
