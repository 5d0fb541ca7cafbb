#pragma once

// Ensemble set builders: EasyEnsemble (independent balanced random
// under-samples) and BalanceCascade (sequential subsets where majority rows
// a per-iteration classifier gets right are retired from the draw pool).

#include <cstdint>
#include <vector>

#include "rebalance/core.hpp"
#include "rebalance/learners.hpp"

namespace rebalance {

struct EnsembleSets {
    std::vector<ResampleResult> subsets;
    // Seed actually used for subset i, derived from the master seed so any
    // subset is reproducible without generating its predecessors.
    std::vector<std::uint64_t> subset_seeds;
    // BalanceCascade only: majority pool size before each draw.
    std::vector<std::size_t> pool_sizes;
};

enum class CascadeClassifier { Knn, LinearSvm };

struct CascadeParams {
    CascadeClassifier classifier = CascadeClassifier::Knn;
    std::size_t k = 1;  // k-NN classifier neighbourhood
    SvmParams svm;      // linear-SVM classifier hyperparameters
};

// n_subsets independent random under-samples, subset i seeded with
// derive_seed(seed, i).
EnsembleSets easy_ensemble(const Dataset& d, std::size_t n_subsets, const RatioSpec& ratio = {},
                           std::uint64_t seed = 0);

// Iteratively draw a balanced subset from the remaining majority pool,
// train the configured classifier on it, and retire the drawn majority rows
// it classifies correctly. Stops after max_iter subsets or as soon as the
// pool cannot fill another subset.
EnsembleSets balance_cascade(const Dataset& d, std::size_t max_iter,
                             const CascadeParams& params = {}, const RatioSpec& ratio = {},
                             std::uint64_t seed = 0);

}  // namespace rebalance
