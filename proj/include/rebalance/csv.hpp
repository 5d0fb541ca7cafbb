#pragma once

// CSV schema: header "f0,f1,...,f{d-1},label", one row per sample, feature
// cells in shortest-round-trip decimal text (parse(write(d)) is bit-exact),
// labels as opaque comma-free tokens.

#include <string>

#include "rebalance/core.hpp"

namespace rebalance {

// Shortest decimal text that parses back to exactly v.
std::string format_double(double v);

Dataset parse_csv(const std::string& text);
std::string to_csv_string(const Dataset& d);

Dataset read_csv(const std::string& path);
void write_csv(const Dataset& d, const std::string& path);

}  // namespace rebalance
