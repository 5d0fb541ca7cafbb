#include "rebalance/learners.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rebalance/neighbors.hpp"
#include "rebalance/rng.hpp"

namespace rebalance {

namespace {

constexpr double kSupportMarginSlack = 1e-3;

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

std::size_t count_distinct_rows(const Dataset& d) {
    std::vector<std::size_t> order(d.n_rows());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ra = d.row(a);
        const auto rb = d.row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    });
    std::size_t distinct = d.n_rows() == 0 ? 0 : 1;
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto prev = d.row(order[i - 1]);
        const auto cur = d.row(order[i]);
        if (!std::equal(prev.begin(), prev.end(), cur.begin())) ++distinct;
    }
    return distinct;
}

// k-means++: first center uniform, then D^2-weighted picks.
std::vector<double> kmeanspp_seed(const Dataset& d, std::size_t k, Xoshiro256ss& rng) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    std::vector<double> centers;
    centers.reserve(k * dim);

    const std::size_t first = rng.below(n);
    const auto first_row = d.row(first);
    centers.insert(centers.end(), first_row.begin(), first_row.end());

    std::vector<double> min_sq(n);
    for (std::size_t i = 0; i < n; ++i)
        min_sq[i] = squared_distance(d.row(i), first_row);

    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (double w : min_sq) total += w;
        std::size_t pick = n;  // sentinel
        if (total > 0.0) {
            const double r = rng.uniform01() * total;
            double cum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cum += min_sq[i];
                if (cum > r) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) {  // fell off due to rounding; take last positive weight
                for (std::size_t i = n; i-- > 0;) {
                    if (min_sq[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        }
        if (pick == n) {  // all weights zero: lowest-index point not yet a center
            pick = 0;
        }
        const auto row = d.row(pick);
        centers.insert(centers.end(), row.begin(), row.end());
        for (std::size_t i = 0; i < n; ++i)
            min_sq[i] = std::min(min_sq[i], squared_distance(d.row(i), row));
    }
    return centers;
}

struct LloydResult {
    std::vector<double> centers;
    double inertia = 0.0;
    std::vector<double> history;
};

LloydResult lloyd(const Dataset& d, std::size_t k, std::vector<double> centers,
                  const KMeansParams& params) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    std::vector<std::size_t> assign(n, 0);
    std::vector<std::size_t> counts(k, 0);
    LloydResult result;
    double prev_inertia = std::numeric_limits<double>::infinity();

    for (std::size_t iter = 0; iter < params.max_iter; ++iter) {
        // assignment step; ties go to the lower center index
        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const double sq = squared_distance(
                    d.row(i), {centers.data() + c * dim, dim});
                if (sq < best) {
                    best = sq;
                    best_c = c;
                }
            }
            assign[i] = best_c;
            inertia += best;
        }
        result.history.push_back(inertia);

        // update step
        std::fill(centers.begin(), centers.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = d.row(i);
            double* center = centers.data() + assign[i] * dim;
            for (std::size_t j = 0; j < dim; ++j) center[j] += row[j];
            ++counts[assign[i]];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;
            double* center = centers.data() + c * dim;
            for (std::size_t j = 0; j < dim; ++j) center[j] /= static_cast<double>(counts[c]);
        }
        // empty clusters grab the point farthest from its center
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            double worst = -1.0;
            std::size_t worst_i = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[assign[i]] <= 1) continue;
                const double sq = squared_distance(
                    d.row(i), {centers.data() + assign[i] * dim, dim});
                if (sq > worst) {
                    worst = sq;
                    worst_i = i;
                }
            }
            const auto row = d.row(worst_i);
            std::copy(row.begin(), row.end(), centers.data() + c * dim);
            --counts[assign[worst_i]];
            assign[worst_i] = c;
            counts[c] = 1;
        }

        const double inertia_drop = prev_inertia - inertia;
        if (iter > 0 && inertia_drop <= params.tol * prev_inertia) {
            prev_inertia = inertia;
            break;
        }
        prev_inertia = inertia;
    }

    // final inertia against the updated centers
    double inertia = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c)
            best = std::min(best, squared_distance(d.row(i), {centers.data() + c * dim, dim}));
        inertia += best;
    }
    result.history.push_back(inertia);
    result.centers = std::move(centers);
    result.inertia = inertia;
    return result;
}

}  // namespace

KMeansModel kmeans_fit(const Dataset& points, std::size_t k, std::uint64_t seed,
                       const KMeansParams& params) {
    if (k < 1) throw ClusterError("k must be at least 1");
    const std::size_t distinct = count_distinct_rows(points);
    if (k > distinct)
        throw ClusterError("k=" + std::to_string(k) + " exceeds " +
                           std::to_string(distinct) + " distinct points");

    Xoshiro256ss rng(seed);
    LloydResult best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (std::size_t run = 0; run < std::max<std::size_t>(params.n_init, 1); ++run) {
        auto result = lloyd(points, k, kmeanspp_seed(points, k, rng), params);
        if (result.inertia < best.inertia) best = std::move(result);
    }

    KMeansModel model;
    model.k = k;
    model.n_features = points.n_features();
    model.centroids = std::move(best.centers);
    model.inertia = best.inertia;
    model.inertia_history = std::move(best.history);
    return model;
}

std::vector<double> knn_loo_true_class_proba(const Dataset& d, std::size_t k) {
    if (d.n_rows() < 2 || k > d.n_rows() - 1)
        throw NeighborCountError("k=" + std::to_string(k) + " with " +
                                 std::to_string(d.n_rows()) + " rows (leave-one-out)");
    std::vector<double> proba(d.n_rows());
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        const auto neighbors = knn_query(d, i, k);
        std::size_t same = 0;
        for (const auto& nb : neighbors)
            if (d.label(nb.index) == d.label(i)) ++same;
        proba[i] = static_cast<double>(same) / static_cast<double>(k);
    }
    return proba;
}

LinearSvmModel linear_svm_fit(const Dataset& d, double lambda, std::size_t epochs,
                              std::uint64_t seed) {
    const auto stats = class_stats(d);  // throws ClassCountError unless 2 classes
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i)
        y[i] = d.label(i) == stats.minority_label ? 1.0 : -1.0;

    LinearSvmModel model;
    model.weights.assign(dim, 0.0);
    model.positive_label = stats.minority_label;

    Xoshiro256ss rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const double w_cap = 1.0 / std::sqrt(lambda);

    std::size_t t = 0;
    for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
        // Fisher-Yates shuffle defines the visit order for this epoch
        for (std::size_t j = n - 1; j > 0; --j)
            std::swap(order[j], order[rng.below(j + 1)]);
        for (std::size_t i : order) {
            ++t;
            const double eta = 1.0 / (lambda * static_cast<double>(t));
            const auto x = d.row(i);
            const double margin = y[i] * model.decision(x);
            const double shrink = 1.0 - eta * lambda;
            for (auto& w : model.weights) w *= shrink;
            if (margin < 1.0) {
                const double step = eta * y[i];
                for (std::size_t j = 0; j < dim; ++j) model.weights[j] += step * x[j];
                model.bias += step;
            }
            // projection onto the ||w|| <= 1/sqrt(lambda) ball
            double norm_sq = 0.0;
            for (double w : model.weights) norm_sq += w * w;
            if (norm_sq > w_cap * w_cap) {
                const double scale = w_cap / std::sqrt(norm_sq);
                for (auto& w : model.weights) w *= scale;
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i)
        if (y[i] * model.decision(d.row(i)) <= 1.0 + kSupportMarginSlack)
            model.support_indices.push_back(i);
    return model;
}

}  // namespace rebalance
