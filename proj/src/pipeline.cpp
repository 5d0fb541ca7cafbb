#include "rebalance/pipeline.hpp"

#include "rebalance/rng.hpp"

namespace rebalance {

namespace {

template <class... Fs>
struct Overload : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

std::uint64_t pick_seed(std::uint64_t config_seed, std::optional<std::uint64_t> override_seed) {
    return override_seed ? *override_seed : config_seed;
}

}  // namespace

ResampleResult apply_sampler(const Dataset& d, const SamplerSpec& spec,
                             std::optional<std::uint64_t> seed_override) {
    return std::visit(
        Overload{
            [&](const RandomUnderConfig& c) {
                return random_under(d, c.ratio, pick_seed(c.seed, seed_override),
                                    c.with_replacement);
            },
            [&](const ClusterCentroidsConfig& c) {
                return cluster_centroids(d, c.ratio, pick_seed(c.seed, seed_override), c.kmeans);
            },
            [&](const NearMissConfig& c) {
                return near_miss(d, c.variant, c.ratio, c.k, c.m,
                                 pick_seed(c.seed, seed_override));
            },
            [&](const InstanceHardnessConfig& c) {
                return instance_hardness_threshold(d, c.ratio, c.k,
                                                   pick_seed(c.seed, seed_override));
            },
            [&](const TomekLinksConfig& c) { return tomek_links(d, c.remove); },
            [&](const EnnConfig& c) { return edited_nn(d, c.k, c.scope); },
            [&](const CnnConfig& c) { return condensed_nn(d, pick_seed(c.seed, seed_override)); },
            [&](const OssConfig& c) {
                return one_sided_selection(d, pick_seed(c.seed, seed_override));
            },
            [&](const NcrConfig& c) { return neighbourhood_cleaning_rule(d, c.k); },
            [&](const RandomOverConfig& c) {
                return random_over(d, c.ratio, pick_seed(c.seed, seed_override));
            },
            [&](const SmoteConfig& c) {
                SmoteConfig cfg = c;
                cfg.seed = pick_seed(c.seed, seed_override);
                return smote(d, cfg);
            },
            [&](const SmoteTomekConfig& c) {
                SmoteConfig cfg = c.smote;
                cfg.seed = pick_seed(cfg.seed, seed_override);
                return smote_tomek(d, cfg);
            },
            [&](const SmoteEnnConfig& c) {
                SmoteConfig cfg = c.smote;
                cfg.seed = pick_seed(cfg.seed, seed_override);
                return smote_enn(d, cfg, c.k);
            },
        },
        spec);
}

std::string method_name(const SamplerSpec& spec) {
    return std::visit(
        Overload{
            [](const RandomUnderConfig&) { return std::string("random-under"); },
            [](const ClusterCentroidsConfig&) { return std::string("cluster-centroids"); },
            [](const NearMissConfig& c) {
                return "nearmiss" + std::to_string(static_cast<int>(c.variant));
            },
            [](const InstanceHardnessConfig&) { return std::string("iht"); },
            [](const TomekLinksConfig&) { return std::string("tomek"); },
            [](const EnnConfig&) { return std::string("enn"); },
            [](const CnnConfig&) { return std::string("cnn"); },
            [](const OssConfig&) { return std::string("oss"); },
            [](const NcrConfig&) { return std::string("ncr"); },
            [](const RandomOverConfig&) { return std::string("random-over"); },
            [](const SmoteConfig& c) {
                switch (c.kind) {
                    case SmoteKind::Borderline1: return std::string("smote-borderline1");
                    case SmoteKind::Borderline2: return std::string("smote-borderline2");
                    case SmoteKind::Svm: return std::string("smote-svm");
                    default: return std::string("smote");
                }
            },
            [](const SmoteTomekConfig&) { return std::string("smote-tomek"); },
            [](const SmoteEnnConfig&) { return std::string("smote-enn"); },
        },
        spec);
}

Sampler& Sampler::fit(const Dataset& d) {
    fitted_stats_ = class_stats(d);  // validates the two-class structure up front
    fitted_data_ = d;
    return *this;
}

ResampleResult Sampler::sample() const {
    if (!fitted_data_) throw Error("sample() called before fit()");
    return apply_sampler(*fitted_data_, spec_);
}

ResampleResult Sampler::fit_sample(const Dataset& d) { return fit(d).sample(); }

const ClassStats& Sampler::stats() const {
    if (!fitted_stats_) throw Error("stats() called before fit()");
    return *fitted_stats_;
}

ResampleResult fit_sample_chain(const SamplerChain& chain, const Dataset& d, std::uint64_t seed) {
    if (chain.stages.empty()) throw PipelineError(0, "empty sampler chain");
    ResampleResult composed;
    for (std::size_t i = 0; i < chain.stages.size(); ++i) {
        const Dataset& input = i == 0 ? d : composed.dataset;
        ResampleResult step;
        try {
            step = apply_sampler(input, chain.stages[i], derive_seed(seed, i));
        } catch (const PipelineError&) {
            throw;
        } catch (const Error& e) {
            throw PipelineError(i, e.what());
        }
        composed = i == 0 ? std::move(step) : compose_results(composed, std::move(step), i);
    }
    return composed;
}

}  // namespace rebalance
