#include "rebalance/under_sampling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rebalance/neighbors.hpp"
#include "rebalance/rng.hpp"

namespace rebalance {

namespace {

ResampleResult keep_rows(const Dataset& d, std::vector<std::size_t> kept) {
    ResampleResult result;
    result.dataset = take_subset(d, kept);
    result.kept_indices = std::move(kept);
    return result;
}

// Sorted union of the two ascending index lists (duplicates preserved so
// with-replacement draws survive).
std::vector<std::size_t> merge_kept(std::span<const std::size_t> a,
                                    std::span<const std::size_t> b) {
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<std::size_t> draw_without_replacement(std::span<const std::size_t> pool,
                                                  std::size_t count, Xoshiro256ss& rng) {
    std::vector<std::size_t> arr(pool.begin(), pool.end());
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t pick = j + rng.below(arr.size() - j);
        std::swap(arr[j], arr[pick]);
    }
    arr.resize(count);
    std::sort(arr.begin(), arr.end());
    return arr;
}

// Majority-vote check used by ENN and NCR: does the row's own label win
// strictly among its k neighbors? Ties count as a loss.
bool wins_own_vote(const Dataset& d, std::size_t row, const NeighborList& neighbors) {
    std::size_t own = 0;
    for (const auto& nb : neighbors)
        if (d.label(nb.index) == d.label(row)) ++own;
    return 2 * own > neighbors.size();
}

std::vector<std::size_t> tomek_removals(const Dataset& d, const ClassStats& stats,
                                        TomekRemove remove) {
    const std::size_t n = d.n_rows();
    std::vector<std::size_t> nn1(n);
    for (std::size_t i = 0; i < n; ++i) nn1[i] = knn_query(d, i, 1)[0].index;

    std::set<std::size_t> removed;
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t b = nn1[a];
        if (b <= a) continue;  // each pair visited once, from its lower member
        if (nn1[b] != a) continue;
        if (d.label(a) == d.label(b)) continue;
        if (remove == TomekRemove::Both) {
            removed.insert(a);
            removed.insert(b);
        } else {
            removed.insert(d.label(a) == stats.majority_label ? a : b);
        }
    }
    return {removed.begin(), removed.end()};
}

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> removed) {
    std::vector<std::size_t> kept;
    kept.reserve(n - removed.size());
    auto it = removed.begin();
    for (std::size_t i = 0; i < n; ++i) {
        if (it != removed.end() && *it == i) {
            ++it;
            continue;
        }
        kept.push_back(i);
    }
    return kept;
}

}  // namespace

ResampleResult random_under_from_pool(const Dataset& d,
                                      std::span<const std::size_t> minority_rows,
                                      std::span<const std::size_t> pool,
                                      std::size_t target, std::uint64_t seed,
                                      bool with_replacement) {
    Xoshiro256ss rng(seed);
    std::vector<std::size_t> chosen;
    if (with_replacement) {
        chosen.reserve(target);
        for (std::size_t j = 0; j < target; ++j) chosen.push_back(pool[rng.below(pool.size())]);
        std::sort(chosen.begin(), chosen.end());
    } else {
        chosen = draw_without_replacement(pool, std::min(target, pool.size()), rng);
    }
    return keep_rows(d, merge_kept(minority_rows, chosen));
}

ResampleResult random_under(const Dataset& d, const RatioSpec& ratio, std::uint64_t seed,
                            bool with_replacement) {
    const auto stats = class_stats(d);
    const auto [_, target_maj] = resolve_targets(stats, ratio, SampleDirection::Under);
    const auto minority = rows_with_label(d, stats.minority_label);
    const auto majority = rows_with_label(d, stats.majority_label);
    return random_under_from_pool(d, minority, majority, target_maj, seed, with_replacement);
}

ResampleResult cluster_centroids(const Dataset& d, const RatioSpec& ratio,
                                 std::uint64_t seed, const KMeansParams& params) {
    const auto stats = class_stats(d);
    const auto [_, target_maj] = resolve_targets(stats, ratio, SampleDirection::Under);
    const auto minority = rows_with_label(d, stats.minority_label);
    const auto majority = rows_with_label(d, stats.majority_label);

    const auto model = kmeans_fit(take_subset(d, majority), target_maj, seed, params);

    ResampleResult result;
    const Dataset kept = take_subset(d, minority);
    std::vector<double> values(kept.values());
    std::vector<std::string> labels(kept.labels());
    for (std::size_t c = 0; c < model.k; ++c) {
        const auto center = model.centroid(c);
        values.insert(values.end(), center.begin(), center.end());
        labels.push_back(stats.majority_label);
        result.synthetic_provenance.push_back({c, c, std::nullopt, 0});
    }
    result.dataset = Dataset(d.n_features(), std::move(values), std::move(labels));
    result.kept_indices = minority;
    return result;
}

ResampleResult near_miss(const Dataset& d, NearMissVariant variant, const RatioSpec& ratio,
                         std::size_t k, std::size_t m, std::uint64_t) {
    const auto stats = class_stats(d);
    const auto [_, target] = resolve_targets(stats, ratio, SampleDirection::Under);
    const auto minority = rows_with_label(d, stats.minority_label);
    const auto majority = rows_with_label(d, stats.majority_label);

    if (k < 1 || k > stats.n_minority)
        throw NeighborCountError("near_miss k=" + std::to_string(k) + " with " +
                                 std::to_string(stats.n_minority) + " minority rows");
    if (variant == NearMissVariant::Three && (m < 1 || m > stats.n_majority))
        throw NeighborCountError("near_miss m=" + std::to_string(m) + " with " +
                                 std::to_string(stats.n_majority) + " majority rows");

    if (target >= stats.n_majority)
        return keep_rows(d, merge_kept(minority, majority));

    // candidate majority rows (all, or the variant-3 shortlist)
    std::vector<std::size_t> candidates;
    if (variant == NearMissVariant::Three) {
        std::set<std::size_t> shortlist;
        for (std::size_t row : minority) {
            for (const auto& nb : knn_query(d, row, m, stats.majority_label))
                shortlist.insert(nb.index);
        }
        candidates.assign(shortlist.begin(), shortlist.end());
    } else {
        candidates = majority;
    }

    struct Scored {
        double mean;
        std::size_t index;
    };
    std::vector<Scored> scored;
    scored.reserve(candidates.size());
    for (std::size_t row : candidates) {
        double sum = 0.0;
        if (variant == NearMissVariant::Two) {
            // k farthest minority rows: take from the tail of the full
            // distance ranking (farthest first is (distance desc, index asc))
            const auto all = knn_query(d, row, stats.n_minority, stats.minority_label);
            for (std::size_t j = 0; j < k; ++j) sum += all[all.size() - 1 - j].distance;
        } else {
            for (const auto& nb : knn_query(d, row, k, stats.minority_label))
                sum += nb.distance;
        }
        scored.push_back({sum / static_cast<double>(k), row});
    }

    const bool keep_largest = variant == NearMissVariant::Three;
    std::sort(scored.begin(), scored.end(), [keep_largest](const Scored& a, const Scored& b) {
        if (a.mean != b.mean) return keep_largest ? a.mean > b.mean : a.mean < b.mean;
        return a.index < b.index;
    });

    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < std::min(target, scored.size()); ++i)
        selected.push_back(scored[i].index);
    std::sort(selected.begin(), selected.end());
    return keep_rows(d, merge_kept(minority, selected));
}

ResampleResult instance_hardness_threshold(const Dataset& d, const RatioSpec& ratio,
                                           std::size_t k, std::uint64_t) {
    const auto stats = class_stats(d);
    const auto [_, target] = resolve_targets(stats, ratio, SampleDirection::Under);
    const auto minority = rows_with_label(d, stats.minority_label);
    const auto majority = rows_with_label(d, stats.majority_label);

    const auto proba = knn_loo_true_class_proba(d, k);

    std::vector<std::size_t> order(majority);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (proba[a] != proba[b]) return proba[a] < proba[b];
        return a < b;
    });
    const std::size_t n_remove = stats.n_majority - target;
    std::vector<std::size_t> surviving(order.begin() + n_remove, order.end());
    std::sort(surviving.begin(), surviving.end());
    return keep_rows(d, merge_kept(minority, surviving));
}

ResampleResult tomek_links(const Dataset& d, TomekRemove remove) {
    const auto stats = class_stats(d);
    const auto removed = tomek_removals(d, stats, remove);
    return keep_rows(d, complement(d.n_rows(), removed));
}

ResampleResult edited_nn(const Dataset& d, std::size_t k, EnnScope scope) {
    const auto stats = class_stats(d);
    std::vector<std::size_t> removed;
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        if (scope == EnnScope::MajorityOnly && d.label(i) != stats.majority_label) continue;
        if (!wins_own_vote(d, i, knn_query(d, i, k))) removed.push_back(i);
    }
    return keep_rows(d, complement(d.n_rows(), removed));
}

ResampleResult condensed_nn(const Dataset& d, std::uint64_t) {
    const auto stats = class_stats(d);
    const auto minority = rows_with_label(d, stats.minority_label);
    const auto majority = rows_with_label(d, stats.majority_label);

    std::vector<std::size_t> store(minority);
    store.push_back(majority.front());
    std::sort(store.begin(), store.end());

    std::vector<std::size_t> remaining(majority.begin() + 1, majority.end());
    bool added = true;
    while (added) {
        added = false;
        std::vector<std::size_t> still_out;
        for (std::size_t row : remaining) {
            const auto nn = knn_point(d, d.row(row), 1, store);
            if (d.label(nn[0].index) != d.label(row)) {
                store.insert(std::upper_bound(store.begin(), store.end(), row), row);
                added = true;
            } else {
                still_out.push_back(row);
            }
        }
        remaining = std::move(still_out);
    }
    return keep_rows(d, store);
}

ResampleResult one_sided_selection(const Dataset& d, std::uint64_t seed) {
    auto condensed = condensed_nn(d, seed);
    // The condensed store can be balanced or even minority-heavy, so the link
    // sweep must keep targeting the class that was majority in the input.
    const auto removed =
        tomek_removals(condensed.dataset, class_stats(d), TomekRemove::MajorityOnly);
    auto cleaned = keep_rows(condensed.dataset, complement(condensed.dataset.n_rows(), removed));
    return compose_results(condensed, std::move(cleaned), 1);
}

ResampleResult neighbourhood_cleaning_rule(const Dataset& d, std::size_t k) {
    const auto stats = class_stats(d);
    std::set<std::size_t> removed;
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        const auto neighbors = knn_query(d, i, k);
        if (wins_own_vote(d, i, neighbors)) continue;
        if (d.label(i) == stats.majority_label) {
            removed.insert(i);  // the ENN part
        } else {
            // misclassified minority row: its majority neighbors go too
            for (const auto& nb : neighbors)
                if (d.label(nb.index) == stats.majority_label) removed.insert(nb.index);
        }
    }
    const std::vector<std::size_t> removed_list(removed.begin(), removed.end());
    return keep_rows(d, complement(d.n_rows(), removed_list));
}

}  // namespace rebalance
