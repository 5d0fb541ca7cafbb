#include "rebalance/ensemble.hpp"

#include <algorithm>
#include <unordered_set>

#include "rebalance/neighbors.hpp"
#include "rebalance/rng.hpp"
#include "rebalance/under_sampling.hpp"

namespace rebalance {

namespace {

// k-NN majority vote over the subset the row was drawn into (the row itself
// is among the candidates, so k=1 always votes for its own label). A split
// vote falls back to the nearest neighbour's label.
std::string knn_vote(const Dataset& subset, std::span<const double> query, std::size_t k,
                     std::span<const std::size_t> candidates, const ClassStats& stats) {
    const auto neighbors = knn_point(subset, query, k, candidates);
    std::size_t minority = 0;
    for (const auto& nb : neighbors)
        if (subset.label(nb.index) == stats.minority_label) ++minority;
    if (2 * minority > k) return stats.minority_label;
    if (2 * minority < k) return stats.majority_label;
    return subset.label(neighbors[0].index);
}

}  // namespace

EnsembleSets easy_ensemble(const Dataset& d, std::size_t n_subsets, const RatioSpec& ratio,
                           std::uint64_t seed) {
    EnsembleSets out;
    for (std::size_t i = 0; i < n_subsets; ++i) {
        const std::uint64_t subset_seed = derive_seed(seed, i);
        out.subsets.push_back(random_under(d, ratio, subset_seed));
        out.subset_seeds.push_back(subset_seed);
    }
    return out;
}

EnsembleSets balance_cascade(const Dataset& d, std::size_t max_iter, const CascadeParams& params,
                             const RatioSpec& ratio, std::uint64_t seed) {
    const auto stats = class_stats(d);
    const auto [_, target] = resolve_targets(stats, ratio, SampleDirection::Under);
    const auto minority = rows_with_label(d, stats.minority_label);
    std::vector<std::size_t> pool = rows_with_label(d, stats.majority_label);

    EnsembleSets out;
    for (std::size_t iter = 0; iter < max_iter && pool.size() >= target; ++iter) {
        const std::uint64_t subset_seed = derive_seed(seed, iter);
        out.pool_sizes.push_back(pool.size());
        out.subset_seeds.push_back(subset_seed);
        auto subset = random_under_from_pool(d, minority, pool, target, subset_seed);

        // Classify the drawn majority rows with a model trained on the subset;
        // the ones it gets right leave the pool for good.
        std::vector<std::size_t> all_rows(subset.dataset.n_rows());
        for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
        LinearSvmModel svm_model;
        if (params.classifier == CascadeClassifier::LinearSvm)
            svm_model = linear_svm_fit(subset.dataset, params.svm.lambda, params.svm.epochs,
                                       derive_seed(subset_seed, 1));

        std::unordered_set<std::size_t> retired;
        for (std::size_t original : subset.kept_indices) {
            if (d.label(original) != stats.majority_label) continue;
            bool correct = false;
            if (params.classifier == CascadeClassifier::Knn) {
                correct = knn_vote(subset.dataset, d.row(original), params.k, all_rows, stats) ==
                          stats.majority_label;
            } else {
                correct = svm_model.predict(d.row(original)) == -1;  // majority maps to -1
            }
            if (correct) retired.insert(original);
        }
        std::erase_if(pool, [&](std::size_t row) { return retired.contains(row); });

        out.subsets.push_back(std::move(subset));
    }
    return out;
}

}  // namespace rebalance
