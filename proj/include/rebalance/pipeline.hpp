#pragma once

// Uniform sampler surface: one config struct per method, a variant covering
// all of them, the two-phase fit/sample contract, and sequential chains with
// per-stage seed derivation.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rebalance/combine.hpp"
#include "rebalance/over_sampling.hpp"
#include "rebalance/under_sampling.hpp"

namespace rebalance {

struct RandomUnderConfig {
    RatioSpec ratio;
    std::uint64_t seed = 0;
    bool with_replacement = false;
};

struct ClusterCentroidsConfig {
    RatioSpec ratio;
    std::uint64_t seed = 0;
    KMeansParams kmeans;
};

struct NearMissConfig {
    NearMissVariant variant = NearMissVariant::One;
    RatioSpec ratio;
    std::size_t k = 3;
    std::size_t m = 3;
    std::uint64_t seed = 0;
};

struct InstanceHardnessConfig {
    RatioSpec ratio;
    std::size_t k = 5;
    std::uint64_t seed = 0;
};

struct TomekLinksConfig {
    TomekRemove remove = TomekRemove::MajorityOnly;
};

struct EnnConfig {
    std::size_t k = 3;
    EnnScope scope = EnnScope::MajorityOnly;
};

struct CnnConfig {
    std::uint64_t seed = 0;
};

struct OssConfig {
    std::uint64_t seed = 0;
};

struct NcrConfig {
    std::size_t k = 3;
};

struct RandomOverConfig {
    RatioSpec ratio;
    std::uint64_t seed = 0;
};

struct SmoteTomekConfig {
    SmoteConfig smote;
};

struct SmoteEnnConfig {
    SmoteConfig smote;
    std::size_t k = 3;
};

using SamplerSpec =
    std::variant<RandomUnderConfig, ClusterCentroidsConfig, NearMissConfig,
                 InstanceHardnessConfig, TomekLinksConfig, EnnConfig, CnnConfig, OssConfig,
                 NcrConfig, RandomOverConfig, SmoteConfig, SmoteTomekConfig, SmoteEnnConfig>;

// Execute one sampler. When seed_override is set it replaces the seed the
// config carries (chains use this to hand each stage a derived seed);
// methods without randomness ignore it.
ResampleResult apply_sampler(const Dataset& d, const SamplerSpec& spec,
                             std::optional<std::uint64_t> seed_override = std::nullopt);

// Canonical method spelling for a spec, e.g. "nearmiss2" or "smote-svm".
std::string method_name(const SamplerSpec& spec);

// Two-phase sampler: fit() captures the dataset and validates its class
// structure, sample() executes on the captured data. fit_sample() is the
// one-shot path and is exactly fit() followed by sample().
class Sampler {
public:
    explicit Sampler(SamplerSpec spec) : spec_(std::move(spec)) {}

    Sampler& fit(const Dataset& d);
    ResampleResult sample() const;
    ResampleResult fit_sample(const Dataset& d);

    const SamplerSpec& spec() const { return spec_; }
    bool fitted() const { return fitted_data_.has_value(); }
    // Class statistics of the fitted dataset.
    const ClassStats& stats() const;

private:
    SamplerSpec spec_;
    std::optional<Dataset> fitted_data_;
    std::optional<ClassStats> fitted_stats_;
};

// Left-to-right sampler composition; stage i consumes stage i-1's output.
struct SamplerChain {
    std::vector<SamplerSpec> stages;
};

// Run the chain on d. Stage i is seeded with derive_seed(seed, i); kept rows
// are traced back to the original input and synthetics are tagged with the
// stage that generated them. A failing stage aborts with a PipelineError
// naming the stage.
ResampleResult fit_sample_chain(const SamplerChain& chain, const Dataset& d, std::uint64_t seed);

}  // namespace rebalance
