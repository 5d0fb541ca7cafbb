#include "rebalance/combine.hpp"

#include "rebalance/under_sampling.hpp"

namespace rebalance {

ResampleResult smote_tomek(const Dataset& d, const SmoteConfig& cfg) {
    auto over = smote(d, cfg);
    auto cleaned = tomek_links(over.dataset, TomekRemove::Both);
    return compose_results(over, std::move(cleaned), 1);
}

ResampleResult smote_enn(const Dataset& d, const SmoteConfig& cfg, std::size_t k) {
    auto over = smote(d, cfg);
    auto cleaned = edited_nn(over.dataset, k, EnnScope::AllClasses);
    return compose_results(over, std::move(cleaned), 1);
}

}  // namespace rebalance
