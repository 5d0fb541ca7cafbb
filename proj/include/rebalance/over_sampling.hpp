#pragma once

// Over-sampling: random minority replication and the SMOTE family
// (regular, borderline-1, borderline-2, SVM). All methods append synthetic
// rows after the unchanged input rows and record per-row provenance.

#include <cstdint>
#include <span>
#include <vector>

#include "rebalance/core.hpp"
#include "rebalance/learners.hpp"

namespace rebalance {

enum class SmoteKind { Regular, Borderline1, Borderline2, Svm };

// Neighborhood character of a row: how many of its m nearest neighbors
// belong to the majority class. Noise = all m; Danger = at least half but
// not all; Safe = fewer than half.
enum class DangerTag { Safe, Danger, Noise };

struct SmoteConfig {
    SmoteKind kind = SmoteKind::Regular;
    std::size_t k_neighbors = 5;   // interpolation partners
    std::size_t m_neighbors = 10;  // danger detection (clamped to n-1)
    RatioSpec ratio;
    std::uint64_t seed = 0;
    SvmParams svm;  // only consulted by SmoteKind::Svm
};

// seed_point + u * (neighbor_point - seed_point). u in [0,1] lands on the
// closed segment; negative u extrapolates past the seed away from the
// neighbor (used by SVM-SMOTE).
std::vector<double> interpolate(std::span<const double> seed_point,
                                std::span<const double> neighbor_point, double u);

// Append uniform-with-replacement copies of minority rows until the
// resolved target is met. Each copy's provenance records the copied row in
// both index slots with u = 0.
ResampleResult random_over(const Dataset& d, const RatioSpec& ratio, std::uint64_t seed);

// Tag every row by the majority share of its m nearest neighbors (self
// excluded, all classes eligible). Only minority rows' tags are meaningful
// to the borderline samplers, but the rule is computed uniformly.
std::vector<DangerTag> classify_danger(const Dataset& d, std::size_t m);

// The SMOTE family. Synthetic rows are interpolations between an eligible
// minority seed row and one of its k nearest neighbors:
//   Regular      - seeds are all minority rows; neighbors are minority.
//   Borderline1  - seeds restricted to Danger rows; neighbors are minority.
//   Borderline2  - as Borderline1, but with probability 1/2 the partner is
//                  a majority neighbor and u is halved (u in [0, 0.5]).
//   Svm          - seeds are minority support vectors of a Pegasos fit;
//                  Safe seeds extrapolate away from the neighbor (recorded
//                  as negative u), others interpolate.
// Throws DegenerateInputError when a restricted kind has no eligible seeds.
ResampleResult smote(const Dataset& d, const SmoteConfig& cfg);

}  // namespace rebalance
