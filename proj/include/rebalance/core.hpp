#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rebalance/errors.hpp"

namespace rebalance {

// Dense feature matrix (row major) plus one label token per row.
// Immutable after construction; all feature values must be finite.
class Dataset {
public:
    Dataset() = default;

    // Empty dataset with a fixed feature count.
    explicit Dataset(std::size_t n_features);

    Dataset(std::size_t n_features, std::vector<double> values,
            std::vector<std::string> labels);

    std::size_t n_rows() const { return labels_.size(); }
    std::size_t n_features() const { return n_features_; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * n_features_, n_features_};
    }
    const std::string& label(std::size_t i) const { return labels_[i]; }

    const std::vector<double>& values() const { return values_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Append one row; the point must match the feature count and be finite.
    void append_row(std::span<const double> point, std::string label);

    bool operator==(const Dataset& other) const = default;

private:
    std::size_t n_features_ = 0;
    std::vector<double> values_;
    std::vector<std::string> labels_;
};

// Per-class counts; minority is the strictly smaller class, ties broken
// toward the lexicographically smaller label token.
struct ClassStats {
    std::string minority_label;
    std::string majority_label;
    std::size_t n_minority = 0;
    std::size_t n_majority = 0;
};

// Target balancing ratio: `auto` (exact balance) or a value in (0, 1].
class RatioSpec {
public:
    RatioSpec() = default;  // auto

    explicit RatioSpec(double target) : value_(target) {
        if (!(target > 0.0) || !(target <= 1.0))
            throw RatioError("ratio must lie in (0, 1], got " + std::to_string(target));
    }

    static RatioSpec auto_ratio() { return RatioSpec{}; }

    bool is_auto() const { return !value_.has_value(); }
    double value() const { return value_.value_or(1.0); }

    bool operator==(const RatioSpec& other) const = default;

private:
    std::optional<double> value_;
};

enum class SampleDirection { Under, Over };

// Origin of one synthetic row. For interpolated rows the row equals
// seed + u * (neighbor - seed); SVM-SMOTE extrapolation records u in
// [-1, 0] so the same identity holds. For k-means centroid rows u is
// absent and both indices hold the cluster ordinal. Indices refer to the
// input rows of the pipeline stage that created the row (`stage`); for a
// single sampler that is the original dataset.
struct SyntheticOrigin {
    std::size_t seed_index = 0;
    std::size_t neighbor_index = 0;
    std::optional<double> u;
    std::size_t stage = 0;

    bool operator==(const SyntheticOrigin& other) const = default;
};

// Resampled dataset plus provenance. Rows kept from the input come first,
// in their original relative order, followed by synthetic rows in
// generation order; kept_indices and synthetic_provenance partition the
// output rows in that order.
struct ResampleResult {
    Dataset dataset;
    std::vector<std::size_t> kept_indices;
    std::vector<SyntheticOrigin> synthetic_provenance;

    bool operator==(const ResampleResult& other) const = default;
};

// Count labels; exactly two distinct labels required.
ClassStats class_stats(const Dataset& d);

// r = n_min / n_maj, in (0, 1].
double balancing_ratio(const ClassStats& s);

// Per-class target counts for a resampling run.
// Under: majority shrinks to min(n_maj, ceil(n_min / r)); over: minority
// grows to max(n_min, floor(r * n_maj)). Both are clamped so the result
// never moves past exact balance; r = auto yields exact equality.
std::pair<std::size_t, std::size_t> resolve_targets(const ClassStats& s,
                                                    const RatioSpec& r,
                                                    SampleDirection direction);

// Rows in the given order, labels carried along. Duplicate indices are
// permitted (sampling with replacement); out-of-range indices throw.
Dataset take_subset(const Dataset& d, std::span<const std::size_t> indices);

// Row indices carrying the given label, ascending.
std::vector<std::size_t> rows_with_label(const Dataset& d, const std::string& label);

// Merge the provenance of two consecutive resampling stages, where `second`
// was computed on first.dataset. Rows the second stage kept are traced back
// to the original input; surviving first-stage synthetics keep their
// provenance, and new second-stage synthetics are tagged with
// `second_stage`. The composed dataset is second.dataset itself.
ResampleResult compose_results(const ResampleResult& first, ResampleResult second,
                               std::size_t second_stage);

}  // namespace rebalance
