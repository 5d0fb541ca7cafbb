#pragma once

// Deterministic generator of two-class Gaussian-blob datasets with a
// controlled imbalance, used by tests, examples, and the CLI.

#include <array>
#include <cstdint>

#include "rebalance/core.hpp"

namespace rebalance {

// Two isotropic Gaussian blobs (std = sigma) centred at
// +/- (class_sep / sqrt(n_features)) * (1, ..., 1), so the centre distance
// is 2 * class_sep regardless of dimensionality. weights = [w_min, w_maj]
// must sum to 1 with 0 < w_min <= w_maj; the minority class gets
// round(w_min * n_samples) rows, labelled "pos" and emitted first (at the
// positive centre), the rest are majority rows labelled "neg".
Dataset make_imbalanced(std::size_t n_samples, std::size_t n_features,
                        std::array<double, 2> weights, double class_sep = 2.0, double sigma = 1.0,
                        std::uint64_t seed = 0);

}  // namespace rebalance
