#include "rebalance/neighbors.hpp"

#include <algorithm>
#include <cmath>

namespace rebalance {

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

// Select the k candidates with the smallest (squared distance, index) key.
NeighborList select_k(const Dataset& d, std::span<const double> query, std::size_t k,
                      std::span<const std::size_t> candidates) {
    if (k < 1 || k > candidates.size())
        throw NeighborCountError("k=" + std::to_string(k) + " with " +
                                 std::to_string(candidates.size()) + " eligible rows");

    struct Entry {
        double sq;
        std::size_t index;
    };
    std::vector<Entry> entries;
    entries.reserve(candidates.size());
    for (std::size_t idx : candidates)
        entries.push_back({squared_distance(query, d.row(idx)), idx});

    std::partial_sort(entries.begin(), entries.begin() + k, entries.end(),
                      [](const Entry& a, const Entry& b) {
                          if (a.sq != b.sq) return a.sq < b.sq;
                          return a.index < b.index;
                      });

    NeighborList out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back({entries[i].index, std::sqrt(entries[i].sq)});
    return out;
}

std::vector<std::size_t> eligible_rows(const Dataset& d,
                                       const std::optional<std::string>& restrict_label,
                                       std::optional<std::size_t> excluded) {
    std::vector<std::size_t> rows;
    rows.reserve(d.n_rows());
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        if (excluded && *excluded == i) continue;
        if (restrict_label && d.label(i) != *restrict_label) continue;
        rows.push_back(i);
    }
    return rows;
}

}  // namespace

double pairwise_distance(std::span<const double> a, std::span<const double> b,
                         DistanceMetric) {
    if (a.size() != b.size())
        throw DimensionError("point dimensions differ: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    return std::sqrt(squared_distance(a, b));
}

NeighborList knn_query(const Dataset& d, std::size_t query_index, std::size_t k,
                       const std::optional<std::string>& restrict_label,
                       bool exclude_self, DistanceMetric) {
    if (query_index >= d.n_rows())
        throw IndexError("query index " + std::to_string(query_index) + " out of range");
    const auto candidates = eligible_rows(
        d, restrict_label,
        exclude_self ? std::optional<std::size_t>(query_index) : std::nullopt);
    return select_k(d, d.row(query_index), k, candidates);
}

std::vector<NeighborList> knn_query_batch(const Dataset& d,
                                          std::span<const std::size_t> queries,
                                          std::size_t k,
                                          const std::optional<std::string>& restrict_label,
                                          bool exclude_self, DistanceMetric metric) {
    std::vector<NeighborList> out;
    out.reserve(queries.size());
    for (std::size_t q : queries)
        out.push_back(knn_query(d, q, k, restrict_label, exclude_self, metric));
    return out;
}

NeighborList knn_point(const Dataset& d, std::span<const double> query, std::size_t k,
                       std::span<const std::size_t> candidates, DistanceMetric) {
    if (query.size() != d.n_features())
        throw DimensionError("query dimension " + std::to_string(query.size()) +
                             " does not match dataset features " +
                             std::to_string(d.n_features()));
    return select_k(d, query, k, candidates);
}

}  // namespace rebalance
