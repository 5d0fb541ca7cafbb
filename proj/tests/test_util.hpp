#pragma once

// Shared fixtures and independent oracles for the test suite. Oracles here
// deliberately avoid the library's own search/sort code paths so that a bug
// cannot hide on both sides of a comparison.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rebalance/core.hpp"

namespace testutil {

// Six 1-D points: two minority "P" rows (x = 0, 1) and four majority "N"
// rows (x = 0.4, 2, 3, 4). Small enough that every method's behaviour on it
// has been enumerated by hand.
inline rebalance::Dataset make_f1() {
    return rebalance::Dataset(1, {0.0, 1.0, 0.4, 2.0, 3.0, 4.0}, {"P", "P", "N", "N", "N", "N"});
}

struct OracleNeighbor {
    std::size_t index;
    double distance;
};

// Brute-force k-NN: full scan, full sort by (squared distance, row index).
inline std::vector<OracleNeighbor> oracle_knn(
    const rebalance::Dataset& d, std::span<const double> query, std::size_t k,
    std::optional<std::size_t> self = std::nullopt,
    const std::optional<std::string>& restrict_label = std::nullopt) {
    struct Entry {
        double sq;
        std::size_t index;
    };
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        if (self && *self == i) continue;
        if (restrict_label && d.label(i) != *restrict_label) continue;
        const auto row = d.row(i);
        double sq = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const double diff = query[j] - row[j];
            sq += diff * diff;
        }
        entries.push_back({sq, i});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.sq != b.sq) return a.sq < b.sq;
        return a.index < b.index;
    });
    std::vector<OracleNeighbor> out;
    for (std::size_t i = 0; i < k && i < entries.size(); ++i)
        out.push_back({entries[i].index, std::sqrt(entries[i].sq)});
    return out;
}

// Random two-class blob dataset; minority rows first, centred at
// +separation per coordinate, majority at -separation. Uses std::mt19937_64
// so test data generation shares nothing with the library RNG.
inline rebalance::Dataset random_dataset(std::mt19937_64& gen, std::size_t n_min,
                                         std::size_t n_maj, std::size_t n_features,
                                         double spread = 1.0, double separation = 1.0) {
    std::normal_distribution<double> noise(0.0, spread);
    std::vector<double> values;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n_min + n_maj; ++i) {
        const bool minority = i < n_min;
        for (std::size_t j = 0; j < n_features; ++j)
            values.push_back((minority ? separation : -separation) + noise(gen));
        labels.push_back(minority ? "P" : "N");
    }
    return rebalance::Dataset(n_features, std::move(values), std::move(labels));
}

inline std::size_t count_label(const rebalance::Dataset& d, const std::string& label) {
    std::size_t c = 0;
    for (const auto& l : d.labels())
        if (l == label) ++c;
    return c;
}

// Original indices with the given label that the result kept, ascending.
inline std::vector<std::size_t> kept_with_label(const rebalance::Dataset& original,
                                                const rebalance::ResampleResult& r,
                                                const std::string& label) {
    std::vector<std::size_t> out;
    for (std::size_t idx : r.kept_indices)
        if (original.label(idx) == label) out.push_back(idx);
    return out;
}

// Worst per-coordinate relative error between each synthetic row and the
// point its provenance claims it was interpolated from. Rows whose
// provenance has no interpolation factor (e.g. centroids) are skipped.
inline double max_reconstruction_error(const rebalance::Dataset& input,
                                       const rebalance::ResampleResult& r) {
    double worst = 0.0;
    const std::size_t first_synth = r.kept_indices.size();
    for (std::size_t s = 0; s < r.synthetic_provenance.size(); ++s) {
        const auto& origin = r.synthetic_provenance[s];
        if (!origin.u) continue;
        const auto seed = input.row(origin.seed_index);
        const auto nbr = input.row(origin.neighbor_index);
        const auto actual = r.dataset.row(first_synth + s);
        for (std::size_t j = 0; j < seed.size(); ++j) {
            const double expected = seed[j] + *origin.u * (nbr[j] - seed[j]);
            const double err = std::abs(actual[j] - expected) / (1.0 + std::abs(expected));
            worst = std::max(worst, err);
        }
    }
    return worst;
}

// True iff the minority rows of `original` all appear, unchanged and in
// order, within the result's kept rows.
inline bool minority_preserved(const rebalance::Dataset& original,
                               const rebalance::ResampleResult& r,
                               const std::string& minority_label) {
    std::vector<std::size_t> expected;
    for (std::size_t i = 0; i < original.n_rows(); ++i)
        if (original.label(i) == minority_label) expected.push_back(i);
    std::vector<std::size_t> actual;
    for (std::size_t idx : r.kept_indices)
        if (original.label(idx) == minority_label) actual.push_back(idx);
    return actual == expected;
}

}  // namespace testutil
