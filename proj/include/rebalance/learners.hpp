#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rebalance/core.hpp"

namespace rebalance {

struct KMeansParams {
    std::size_t n_init = 10;
    std::size_t max_iter = 300;
    double tol = 1e-6;  // relative inertia change
};

struct KMeansModel {
    std::size_t k = 0;
    std::size_t n_features = 0;
    std::vector<double> centroids;  // row major, k x n_features
    double inertia = 0.0;
    std::vector<double> inertia_history;  // winning restart, one entry per Lloyd pass

    std::span<const double> centroid(std::size_t i) const {
        return {centroids.data() + i * n_features, n_features};
    }
};

// Lloyd's algorithm with k-means++ seeding, best of n_init restarts by
// inertia. Requires k <= number of distinct points.
KMeansModel kmeans_fit(const Dataset& points, std::size_t k, std::uint64_t seed,
                       const KMeansParams& params = {});

// Per row: fraction of its k leave-one-out nearest neighbors sharing its
// label. The instance-hardness score is 1 minus this value.
std::vector<double> knn_loo_true_class_proba(const Dataset& d, std::size_t k);

struct SvmParams {
    double lambda = 0.01;
    std::size_t epochs = 20;
};

struct LinearSvmModel {
    std::vector<double> weights;
    double bias = 0.0;
    std::string positive_label;  // minority class, mapped to y = +1
    std::vector<std::size_t> support_indices;  // rows with margin <= 1 + 1e-3

    double decision(std::span<const double> x) const {
        double v = bias;
        for (std::size_t i = 0; i < weights.size(); ++i) v += weights[i] * x[i];
        return v;
    }

    // +1 = minority side; decision boundary maps to +1.
    int predict(std::span<const double> x) const { return decision(x) >= 0.0 ? 1 : -1; }
};

// Pegasos stochastic subgradient descent with per-epoch shuffling; the
// minority class is mapped to +1. Deterministic given the seed.
LinearSvmModel linear_svm_fit(const Dataset& d, double lambda, std::size_t epochs,
                              std::uint64_t seed);

inline LinearSvmModel linear_svm_fit(const Dataset& d, const SvmParams& p,
                                     std::uint64_t seed) {
    return linear_svm_fit(d, p.lambda, p.epochs, seed);
}

}  // namespace rebalance
