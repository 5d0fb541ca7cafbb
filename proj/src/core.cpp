#include "rebalance/core.hpp"

#include <cmath>
#include <map>

namespace rebalance {

Dataset::Dataset(std::size_t n_features) : n_features_(n_features) {
    if (n_features_ == 0) throw ShapeError("dataset needs at least one feature");
}

Dataset::Dataset(std::size_t n_features, std::vector<double> values,
                 std::vector<std::string> labels)
    : n_features_(n_features), values_(std::move(values)), labels_(std::move(labels)) {
    if (n_features_ == 0) throw ShapeError("dataset needs at least one feature");
    if (values_.size() != labels_.size() * n_features_)
        throw ShapeError("feature matrix size does not match label count");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw ValueError("non-finite feature value at row " +
                             std::to_string(i / n_features_) + ", column " +
                             std::to_string(i % n_features_));
    }
}

void Dataset::append_row(std::span<const double> point, std::string label) {
    if (point.size() != n_features_)
        throw DimensionError("row has " + std::to_string(point.size()) + " features, dataset has " +
                             std::to_string(n_features_));
    for (double v : point)
        if (!std::isfinite(v)) throw ValueError("non-finite feature value in appended row");
    values_.insert(values_.end(), point.begin(), point.end());
    labels_.push_back(std::move(label));
}

ClassStats class_stats(const Dataset& d) {
    std::map<std::string, std::size_t> counts;
    for (const auto& label : d.labels()) ++counts[label];
    if (counts.size() != 2)
        throw ClassCountError("expected exactly 2 distinct labels, got " +
                              std::to_string(counts.size()));
    // std::map iterates in label order, so `first` is the smaller token;
    // on a count tie the smaller label becomes the minority.
    const auto& first = *counts.begin();
    const auto& second = *std::next(counts.begin());
    ClassStats s;
    if (first.second <= second.second) {
        s.minority_label = first.first;
        s.majority_label = second.first;
        s.n_minority = first.second;
        s.n_majority = second.second;
    } else {
        s.minority_label = second.first;
        s.majority_label = first.first;
        s.n_minority = second.second;
        s.n_majority = first.second;
    }
    return s;
}

double balancing_ratio(const ClassStats& s) {
    return static_cast<double>(s.n_minority) / static_cast<double>(s.n_majority);
}

std::pair<std::size_t, std::size_t> resolve_targets(const ClassStats& s,
                                                    const RatioSpec& r,
                                                    SampleDirection direction) {
    const double ratio = r.value();
    if (direction == SampleDirection::Under) {
        std::size_t target = s.n_majority;
        if (r.is_auto()) {
            target = s.n_minority;
        } else {
            const double raw = std::ceil(static_cast<double>(s.n_minority) / ratio);
            target = static_cast<std::size_t>(raw);
        }
        if (target < s.n_minority) target = s.n_minority;
        if (target > s.n_majority) target = s.n_majority;
        return {s.n_minority, target};
    }
    std::size_t target = s.n_minority;
    if (r.is_auto()) {
        target = s.n_majority;
    } else {
        const double raw = std::floor(ratio * static_cast<double>(s.n_majority));
        target = static_cast<std::size_t>(raw);
    }
    if (target < s.n_minority) target = s.n_minority;
    if (target > s.n_majority) target = s.n_majority;
    return {target, s.n_majority};
}

Dataset take_subset(const Dataset& d, std::span<const std::size_t> indices) {
    std::vector<double> values;
    std::vector<std::string> labels;
    values.reserve(indices.size() * d.n_features());
    labels.reserve(indices.size());
    for (std::size_t idx : indices) {
        if (idx >= d.n_rows())
            throw IndexError("row index " + std::to_string(idx) + " out of range (" +
                             std::to_string(d.n_rows()) + " rows)");
        const auto row = d.row(idx);
        values.insert(values.end(), row.begin(), row.end());
        labels.push_back(d.label(idx));
    }
    return Dataset(d.n_features(), std::move(values), std::move(labels));
}

std::vector<std::size_t> rows_with_label(const Dataset& d, const std::string& label) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.n_rows(); ++i)
        if (d.label(i) == label) out.push_back(i);
    return out;
}

ResampleResult compose_results(const ResampleResult& first, ResampleResult second,
                               std::size_t second_stage) {
    const std::size_t first_kept = first.kept_indices.size();
    ResampleResult out;
    out.dataset = std::move(second.dataset);
    for (std::size_t j : second.kept_indices) {
        if (j < first_kept) {
            out.kept_indices.push_back(first.kept_indices[j]);
        } else {
            // A first-stage synthetic row that survived the second stage; its
            // provenance (indices relative to the first stage's input) rides along.
            out.synthetic_provenance.push_back(first.synthetic_provenance[j - first_kept]);
        }
    }
    for (SyntheticOrigin origin : second.synthetic_provenance) {
        origin.stage = second_stage;
        out.synthetic_provenance.push_back(origin);
    }
    return out;
}

}  // namespace rebalance
