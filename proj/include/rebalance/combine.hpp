#pragma once

// Combined resampling: SMOTE followed by a cleaning under-sampler applied
// to the over-sampled dataset. The cleaning stage deliberately targets all
// classes so that freshly generated synthetics are themselves eligible for
// removal; surviving synthetics keep their provenance.

#include "rebalance/over_sampling.hpp"

namespace rebalance {

// SMOTE, then Tomek-link removal with both pair members dropped.
ResampleResult smote_tomek(const Dataset& d, const SmoteConfig& cfg);

// SMOTE, then edited-nearest-neighbours cleaning over all classes.
ResampleResult smote_enn(const Dataset& d, const SmoteConfig& cfg, std::size_t k = 3);

}  // namespace rebalance
