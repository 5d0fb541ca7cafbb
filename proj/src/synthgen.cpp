#include "rebalance/synthgen.hpp"

#include <cmath>
#include <string>

#include "rebalance/rng.hpp"

namespace rebalance {

Dataset make_imbalanced(std::size_t n_samples, std::size_t n_features,
                        std::array<double, 2> weights, double class_sep, double sigma,
                        std::uint64_t seed) {
    const double w_min = weights[0];
    const double w_maj = weights[1];
    if (std::abs(w_min + w_maj - 1.0) > 1e-9)
        throw WeightError("class weights must sum to 1, got " + std::to_string(w_min + w_maj));
    if (w_min <= 0.0) throw WeightError("minority weight must be positive");
    if (w_min > w_maj) throw WeightError("minority weight must not exceed the majority weight");

    const auto n_min =
        static_cast<std::size_t>(std::llround(w_min * static_cast<double>(n_samples)));
    const double offset = class_sep / std::sqrt(static_cast<double>(n_features));

    Dataset d(n_features);
    Xoshiro256ss rng(seed);
    std::vector<double> point(n_features);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const bool is_minority = i < n_min;
        const double centre = is_minority ? offset : -offset;
        for (std::size_t j = 0; j < n_features; ++j) point[j] = centre + sigma * rng.normal();
        d.append_row(point, is_minority ? "pos" : "neg");
    }
    return d;
}

}  // namespace rebalance
