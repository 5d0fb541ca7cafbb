#pragma once

#include <cstdint>
#include <span>

#include "rebalance/core.hpp"
#include "rebalance/learners.hpp"

namespace rebalance {

enum class NearMissVariant { One = 1, Two = 2, Three = 3 };
enum class TomekRemove { MajorityOnly, Both };
enum class EnnScope { MajorityOnly, AllClasses };

// --- fixed under-sampling (driven to an exact target count) ---

// Minority kept intact; majority subsampled uniformly to the resolved
// target. Kept rows stay in original order.
ResampleResult random_under(const Dataset& d, const RatioSpec& ratio, std::uint64_t seed,
                            bool with_replacement = false);

// Majority class replaced by k-means centroids (k = target majority
// count); centroids are synthetic rows with no interpolation coefficient.
ResampleResult cluster_centroids(const Dataset& d, const RatioSpec& ratio,
                                 std::uint64_t seed, const KMeansParams& params = {});

// Variant 1: keep majority rows with the smallest mean distance to their k
// nearest minority rows. Variant 2: same but over the k farthest minority
// rows. Variant 3: shortlist each minority row's m nearest majority rows,
// then keep shortlisted rows with the LARGEST mean distance to their k
// nearest minority rows. Ties break toward the lower row index.
ResampleResult near_miss(const Dataset& d, NearMissVariant variant, const RatioSpec& ratio,
                         std::size_t k = 3, std::size_t m = 3, std::uint64_t seed = 0);

// Remove the majority rows whose leave-one-out k-NN true-class probability
// is lowest (hardest first; ties remove the lower index first).
ResampleResult instance_hardness_threshold(const Dataset& d, const RatioSpec& ratio,
                                           std::size_t k = 5, std::uint64_t seed = 0);

// --- cleaning under-sampling (criterion-driven, no count target) ---

// Remove the majority member (or both members) of every cross-class mutual
// 1-NN pair, detected once on the original dataset.
ResampleResult tomek_links(const Dataset& d, TomekRemove remove = TomekRemove::MajorityOnly);

// Remove every in-scope row whose label loses the vote of its k nearest
// neighbors in the original dataset; vote ties count as disagreement.
ResampleResult edited_nn(const Dataset& d, std::size_t k = 3,
                         EnnScope scope = EnnScope::MajorityOnly);

// Hart's condensed nearest neighbour: grow a store from all minority rows
// plus the lowest-index majority row, sweeping remaining majority rows in
// index order and adding the 1-NN-misclassified ones until a sweep adds
// nothing.
ResampleResult condensed_nn(const Dataset& d, std::uint64_t seed = 0);

// condensed_nn followed by majority-only Tomek link removal on the
// condensed set.
ResampleResult one_sided_selection(const Dataset& d, std::uint64_t seed = 0);

// Majority rows removed by edited_nn, plus the majority rows among the k
// neighbors of every minority row that those neighbors misclassify.
ResampleResult neighbourhood_cleaning_rule(const Dataset& d, std::size_t k = 3);

// Balanced draw shared by random_under and the ensemble builders: sample
// `target` rows from `pool` and keep them plus `minority_rows`, all in
// original order. Both index spans must be ascending.
ResampleResult random_under_from_pool(const Dataset& d,
                                      std::span<const std::size_t> minority_rows,
                                      std::span<const std::size_t> pool,
                                      std::size_t target, std::uint64_t seed,
                                      bool with_replacement = false);

}  // namespace rebalance
