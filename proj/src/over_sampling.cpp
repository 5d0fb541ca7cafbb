#include "rebalance/over_sampling.hpp"

#include <string>
#include <unordered_map>

#include "rebalance/neighbors.hpp"
#include "rebalance/rng.hpp"

namespace rebalance {

namespace {

// Start the result from the unchanged input: every row kept, in order.
ResampleResult keep_everything(const Dataset& d) {
    ResampleResult result;
    result.dataset = d;
    result.kept_indices.resize(d.n_rows());
    for (std::size_t i = 0; i < d.n_rows(); ++i) result.kept_indices[i] = i;
    return result;
}

void append_synthetic(ResampleResult& result, std::span<const double> point,
                      const std::string& label, SyntheticOrigin origin) {
    result.dataset.append_row(point, label);
    result.synthetic_provenance.push_back(origin);
}

}  // namespace

std::vector<double> interpolate(std::span<const double> seed_point,
                                std::span<const double> neighbor_point, double u) {
    if (seed_point.size() != neighbor_point.size())
        throw DimensionError("interpolate endpoints have " + std::to_string(seed_point.size()) +
                             " and " + std::to_string(neighbor_point.size()) + " features");
    std::vector<double> out(seed_point.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = seed_point[j] + u * (neighbor_point[j] - seed_point[j]);
    return out;
}

ResampleResult random_over(const Dataset& d, const RatioSpec& ratio, std::uint64_t seed) {
    const auto stats = class_stats(d);
    const auto [target_min, _] = resolve_targets(stats, ratio, SampleDirection::Over);
    const auto minority = rows_with_label(d, stats.minority_label);

    auto result = keep_everything(d);
    Xoshiro256ss rng(seed);
    for (std::size_t j = stats.n_minority; j < target_min; ++j) {
        const std::size_t pick = minority[rng.below(minority.size())];
        append_synthetic(result, d.row(pick), stats.minority_label,
                         {.seed_index = pick, .neighbor_index = pick, .u = 0.0, .stage = 0});
    }
    return result;
}

std::vector<DangerTag> classify_danger(const Dataset& d, std::size_t m) {
    const auto stats = class_stats(d);
    std::vector<DangerTag> tags(d.n_rows());
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        const auto neighbors = knn_query(d, i, m);
        std::size_t majority = 0;
        for (const auto& nb : neighbors)
            if (d.label(nb.index) == stats.majority_label) ++majority;
        if (majority == m)
            tags[i] = DangerTag::Noise;
        else if (2 * majority >= m)
            tags[i] = DangerTag::Danger;
        else
            tags[i] = DangerTag::Safe;
    }
    return tags;
}

ResampleResult smote(const Dataset& d, const SmoteConfig& cfg) {
    const auto stats = class_stats(d);
    const auto [target_min, _] = resolve_targets(stats, cfg.ratio, SampleDirection::Over);
    const std::size_t k = cfg.k_neighbors;
    if (k < 1 || stats.n_minority < 2 || k > stats.n_minority - 1)
        throw NeighborCountError("smote k_neighbors=" + std::to_string(k) + " with " +
                                 std::to_string(stats.n_minority) + " minority rows");

    // Eligible seed rows, per kind. Danger tags are needed by the borderline
    // kinds (seed restriction) and by the SVM kind (extrapolation switch).
    const auto minority = rows_with_label(d, stats.minority_label);
    std::vector<DangerTag> tags;
    if (cfg.kind != SmoteKind::Regular) {
        const std::size_t m = std::min(cfg.m_neighbors, d.n_rows() - 1);
        tags = classify_danger(d, m);
    }

    std::vector<std::size_t> seeds;
    if (cfg.kind == SmoteKind::Regular) {
        seeds = minority;
    } else if (cfg.kind == SmoteKind::Svm) {
        const auto model =
            linear_svm_fit(d, cfg.svm.lambda, cfg.svm.epochs, derive_seed(cfg.seed, 1));
        for (std::size_t row : model.support_indices)
            if (d.label(row) == stats.minority_label) seeds.push_back(row);
        if (seeds.empty())
            throw DegenerateInputError("svm smote found no minority support vectors");
    } else {
        for (std::size_t row : minority)
            if (tags[row] == DangerTag::Danger) seeds.push_back(row);
        if (seeds.empty())
            throw DegenerateInputError("borderline smote found no danger rows");
    }

    // Neighbor lists are fixed up front so generation is a pure function of
    // the RNG stream: per synthetic, draw seed, (borderline-2 only) branch
    // coin, neighbor, then u.
    std::unordered_map<std::size_t, NeighborList> minority_nbrs;
    std::unordered_map<std::size_t, NeighborList> majority_nbrs;
    for (std::size_t row : seeds) {
        minority_nbrs[row] = knn_query(d, row, k, stats.minority_label);
        if (cfg.kind == SmoteKind::Borderline2)
            majority_nbrs[row] = knn_query(d, row, k, stats.majority_label);
    }

    auto result = keep_everything(d);
    Xoshiro256ss rng(cfg.seed);
    for (std::size_t j = stats.n_minority; j < target_min; ++j) {
        const std::size_t seed_row = seeds[rng.below(seeds.size())];
        bool toward_majority = false;
        if (cfg.kind == SmoteKind::Borderline2) toward_majority = rng.uniform01() < 0.5;
        const auto& nbrs =
            toward_majority ? majority_nbrs.at(seed_row) : minority_nbrs.at(seed_row);
        const std::size_t nbr_row = nbrs[rng.below(nbrs.size())].index;
        double u = rng.uniform01();
        if (toward_majority) u *= 0.5;
        if (cfg.kind == SmoteKind::Svm && tags[seed_row] == DangerTag::Safe)
            u = -u;  // extrapolate away from the neighbor, into minority territory
        append_synthetic(result, interpolate(d.row(seed_row), d.row(nbr_row), u),
                         stats.minority_label,
                         {.seed_index = seed_row, .neighbor_index = nbr_row, .u = u, .stage = 0});
    }
    return result;
}

}  // namespace rebalance
