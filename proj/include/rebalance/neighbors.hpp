#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rebalance/core.hpp"

namespace rebalance {

enum class DistanceMetric { Euclidean };

struct Neighbor {
    std::size_t index = 0;
    double distance = 0.0;

    bool operator==(const Neighbor& other) const = default;
};

// Ascending by distance; exact ties ordered by ascending row index.
// Ordering is computed on squared distances (exact comparisons); the
// reported distance is the metric value.
using NeighborList = std::vector<Neighbor>;

double pairwise_distance(std::span<const double> a, std::span<const double> b,
                         DistanceMetric metric = DistanceMetric::Euclidean);

// k nearest rows to d.row(query_index). restrict_label limits candidates to
// rows carrying that label; exclude_self removes the query row itself.
NeighborList knn_query(const Dataset& d, std::size_t query_index, std::size_t k,
                       const std::optional<std::string>& restrict_label = std::nullopt,
                       bool exclude_self = true,
                       DistanceMetric metric = DistanceMetric::Euclidean);

std::vector<NeighborList> knn_query_batch(
    const Dataset& d, std::span<const std::size_t> queries, std::size_t k,
    const std::optional<std::string>& restrict_label = std::nullopt,
    bool exclude_self = true, DistanceMetric metric = DistanceMetric::Euclidean);

// k nearest rows to an arbitrary point, searched over an explicit candidate
// row set. The substrate for CNN store queries and k-NN classification.
NeighborList knn_point(const Dataset& d, std::span<const double> query, std::size_t k,
                       std::span<const std::size_t> candidates,
                       DistanceMetric metric = DistanceMetric::Euclidean);

}  // namespace rebalance
