#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "rebalance/ensemble.hpp"
#include "rebalance/pipeline.hpp"
#include "rebalance/rng.hpp"
#include "test_util.hpp"

using namespace rebalance;

namespace {

// dataset on which every smote kind (and thus every spec) can run: enough
// minority rows for the default neighbor counts, plus genuine class overlap
Dataset versatile_dataset(std::mt19937_64& gen) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        auto d = testutil::random_dataset(gen, 15, 45, 2, 2.0, 0.8);
        try {
            for (SmoteKind kind : {SmoteKind::Borderline1, SmoteKind::Borderline2,
                                   SmoteKind::Svm}) {
                SmoteConfig cfg;
                cfg.kind = kind;
                cfg.seed = 5;
                smote(d, cfg);
            }
            return d;
        } catch (const Error&) {
            continue;
        }
    }
    REQUIRE(false);
    return testutil::make_f1();
}

std::vector<SamplerSpec> all_specs() {
    SmoteConfig regular;
    regular.seed = 5;
    SmoteConfig b1 = regular;
    b1.kind = SmoteKind::Borderline1;
    SmoteConfig b2 = regular;
    b2.kind = SmoteKind::Borderline2;
    SmoteConfig svm = regular;
    svm.kind = SmoteKind::Svm;
    return {
        RandomUnderConfig{{}, 5, false},
        ClusterCentroidsConfig{{}, 5, {}},
        NearMissConfig{NearMissVariant::One, {}, 3, 3, 5},
        NearMissConfig{NearMissVariant::Two, {}, 3, 3, 5},
        NearMissConfig{NearMissVariant::Three, {}, 3, 3, 5},
        InstanceHardnessConfig{{}, 5, 5},
        TomekLinksConfig{TomekRemove::MajorityOnly},
        EnnConfig{3, EnnScope::MajorityOnly},
        CnnConfig{5},
        OssConfig{5},
        NcrConfig{3},
        RandomOverConfig{{}, 5},
        regular,
        b1,
        b2,
        svm,
        SmoteTomekConfig{regular},
        SmoteEnnConfig{regular, 3},
    };
}

}  // namespace

TEST_CASE("apply_sampler dispatches to the matching method") {
    const auto f1 = testutil::make_f1();
    CHECK(apply_sampler(f1, RandomUnderConfig{{}, 42, false}) == random_under(f1, {}, 42));
    CHECK(apply_sampler(f1, ClusterCentroidsConfig{{}, 3, {}}) == cluster_centroids(f1, {}, 3));
    CHECK(apply_sampler(f1, NearMissConfig{NearMissVariant::Three, {}, 2, 3, 0}) ==
          near_miss(f1, NearMissVariant::Three, {}, 2, 3));
    CHECK(apply_sampler(f1, InstanceHardnessConfig{{}, 3, 0}) ==
          instance_hardness_threshold(f1, {}, 3));
    CHECK(apply_sampler(f1, TomekLinksConfig{TomekRemove::Both}) ==
          tomek_links(f1, TomekRemove::Both));
    CHECK(apply_sampler(f1, EnnConfig{3, EnnScope::AllClasses}) ==
          edited_nn(f1, 3, EnnScope::AllClasses));
    CHECK(apply_sampler(f1, CnnConfig{0}) == condensed_nn(f1));
    CHECK(apply_sampler(f1, OssConfig{0}) == one_sided_selection(f1));
    CHECK(apply_sampler(f1, NcrConfig{3}) == neighbourhood_cleaning_rule(f1, 3));
    CHECK(apply_sampler(f1, RandomOverConfig{{}, 42}) == random_over(f1, {}, 42));

    SmoteConfig cfg;
    cfg.k_neighbors = 1;
    cfg.seed = 42;
    CHECK(apply_sampler(f1, cfg) == smote(f1, cfg));
    CHECK(apply_sampler(f1, SmoteTomekConfig{cfg}) == smote_tomek(f1, cfg));
    CHECK(apply_sampler(f1, SmoteEnnConfig{cfg, 3}) == smote_enn(f1, cfg, 3));
}

TEST_CASE("apply_sampler seed override replaces the configured seed") {
    const auto f1 = testutil::make_f1();
    CHECK(apply_sampler(f1, RandomUnderConfig{{}, 0, false}, 42) == random_under(f1, {}, 42));
    SmoteConfig cfg;
    cfg.k_neighbors = 1;
    cfg.seed = 0;
    SmoteConfig reseeded = cfg;
    reseeded.seed = 42;
    CHECK(apply_sampler(f1, cfg, 42) == smote(f1, reseeded));
    // deterministic methods ignore the override
    CHECK(apply_sampler(f1, NcrConfig{3}, 42) == neighbourhood_cleaning_rule(f1, 3));
}

TEST_CASE("method_name spells every sampler canonically") {
    const std::vector<std::string> expect{
        "random-under", "cluster-centroids", "nearmiss1", "nearmiss2", "nearmiss3",
        "iht",          "tomek",             "enn",       "cnn",       "oss",
        "ncr",          "random-over",       "smote",     "smote-borderline1",
        "smote-borderline2", "smote-svm",    "smote-tomek", "smote-enn",
    };
    const auto specs = all_specs();
    REQUIRE(specs.size() == expect.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
        CHECK(method_name(specs[i]) == expect[i]);
}

TEST_CASE("fit then sample equals fit_sample for every method") {
    std::mt19937_64 gen(29);
    const auto d = versatile_dataset(gen);
    for (const auto& spec : all_specs()) {
        CAPTURE(method_name(spec));
        Sampler two_phase(spec);
        two_phase.fit(d);
        CHECK(two_phase.fitted());
        const auto split = two_phase.sample();
        Sampler one_shot(spec);
        const auto direct = one_shot.fit_sample(d);
        CHECK(split == direct);
        CHECK(direct == apply_sampler(d, spec));
    }
}

TEST_CASE("sampler exposes the fitted class statistics") {
    const auto f1 = testutil::make_f1();
    Sampler s(SamplerSpec{NcrConfig{3}});
    CHECK(!s.fitted());
    CHECK_THROWS_AS(s.sample(), Error);
    CHECK_THROWS_AS(s.stats(), Error);
    s.fit(f1);
    CHECK(s.fitted());
    CHECK(s.stats().minority_label == "P");
    CHECK(s.stats().n_minority == 2);
    CHECK(s.stats().n_majority == 4);
}

TEST_CASE("a two-stage chain reproduces the fused combined sampler") {
    std::mt19937_64 gen(30);
    const auto d = versatile_dataset(gen);
    SmoteConfig cfg;
    cfg.seed = 0;  // overridden by the chain

    SamplerChain chain;
    chain.stages = {cfg, TomekLinksConfig{TomekRemove::Both}};
    const auto chained = fit_sample_chain(chain, d, 42);

    SmoteConfig staged = cfg;
    staged.seed = derive_seed(42, 0);
    CHECK(chained == smote_tomek(d, staged));
}

TEST_CASE("a single-stage chain is the staged sampler itself") {
    const auto f1 = testutil::make_f1();
    SamplerChain chain;
    chain.stages = {RandomUnderConfig{{}, 0, false}};
    CHECK(fit_sample_chain(chain, f1, 9) == random_under(f1, {}, derive_seed(9, 0)));
}

TEST_CASE("chains tag each synthetic with its stage") {
    const auto f1 = testutil::make_f1();
    SmoteConfig first;
    first.k_neighbors = 1;
    first.ratio = RatioSpec(0.75);  // one synthetic
    SmoteConfig second;
    second.k_neighbors = 2;  // stage-1 input has three minority rows

    SamplerChain chain;
    chain.stages = {first, second};
    const auto r = fit_sample_chain(chain, f1, 3);

    REQUIRE(r.synthetic_provenance.size() == 2);
    CHECK(r.synthetic_provenance[0].stage == 0);
    CHECK(r.synthetic_provenance[1].stage == 1);
    CHECK(r.synthetic_provenance[0].seed_index < 6);   // indexes the original rows
    CHECK(r.synthetic_provenance[1].seed_index < 7);   // indexes stage-1 input rows
    CHECK(r.kept_indices == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});
    CHECK(r.dataset.n_rows() == 8);
}

TEST_CASE("chains trace kept rows through multiple stages") {
    const auto f1 = testutil::make_f1();
    SamplerChain chain;
    chain.stages = {RandomOverConfig{RatioSpec(1.0), 0}, TomekLinksConfig{TomekRemove::Both},
                    RandomUnderConfig{{}, 0, false}};
    const auto r = fit_sample_chain(chain, f1, 17);
    for (std::size_t i = 0; i < r.kept_indices.size(); ++i) {
        CHECK(r.kept_indices[i] < 6);
        if (i > 0) CHECK(r.kept_indices[i] > r.kept_indices[i - 1]);
    }
    CHECK(fit_sample_chain(chain, f1, 17) == r);
}

TEST_CASE("an empty chain is a pipeline error") {
    const auto f1 = testutil::make_f1();
    try {
        fit_sample_chain(SamplerChain{}, f1, 0);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == 0);
        CHECK(std::string(e.what()) == "stage 0: empty sampler chain");
    }
}

TEST_CASE("a failing stage reports its position and cause") {
    const auto f1 = testutil::make_f1();
    SamplerChain chain;
    chain.stages = {RandomUnderConfig{{}, 0, false},
                    NearMissConfig{NearMissVariant::One, {}, 99, 3, 0}};
    try {
        fit_sample_chain(chain, f1, 0);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(e.stage() == 1);
        CHECK(std::string(e.what()).find("stage 1:") == 0);
        CHECK(std::string(e.what()).find("near_miss") != std::string::npos);
    }
}
