#include "rebalance/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rebalance/csv.hpp"
#include "rebalance/ensemble.hpp"
#include "rebalance/pipeline.hpp"
#include "rebalance/synthgen.hpp"

namespace rebalance {

namespace {

const std::vector<std::string> kResampleMethods = {
    "random-under", "cluster-centroids", "nearmiss1",         "nearmiss2",
    "nearmiss3",    "iht",               "tomek",             "enn",
    "cnn",          "oss",               "ncr",               "random-over",
    "smote",        "smote-borderline1", "smote-borderline2", "smote-svm",
    "smote-tomek",  "smote-enn"};

struct ResampleOptions {
    std::string method;
    std::string ratio = "auto";
    std::uint64_t seed = 0;
    std::string input;
    std::string output;
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;
    std::size_t enn_k = 3;
    std::string tomek_remove = "majority";
    std::string enn_scope = "majority";
    double svm_lambda = 0.01;
    std::size_t svm_epochs = 20;
    bool with_replacement = false;
};

struct EnsembleOptions {
    std::string method;
    std::size_t n_subsets = 10;
    std::size_t max_iter = 10;
    std::string ratio = "auto";
    std::uint64_t seed = 0;
    std::string input;
    std::string out_dir;
    std::string classifier = "knn";
    std::size_t k = 1;
    double svm_lambda = 0.01;
    std::size_t svm_epochs = 20;
};

struct GenerateOptions {
    std::size_t n = 0;
    std::size_t features = 0;
    std::string weights;
    double class_sep = 2.0;
    double sigma = 1.0;
    std::uint64_t seed = 0;
    std::string output;
};

RatioSpec make_ratio(const std::string& text) {
    if (text == "auto") return {};
    return RatioSpec(std::stod(text));
}

std::string check_ratio_text(const std::string& text) {
    if (text == "auto") return {};
    try {
        std::size_t consumed = 0;
        const double v = std::stod(text, &consumed);
        if (consumed != text.size() || !(v > 0.0 && v <= 1.0))
            return "must be 'auto' or a number in (0, 1]";
    } catch (const std::exception&) {
        return "must be 'auto' or a number in (0, 1]";
    }
    return {};
}

std::string check_weights_text(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) return "must be two comma-separated weights, e.g. 0.1,0.9";
    try {
        std::size_t consumed = 0;
        const std::string first = text.substr(0, comma);
        const std::string second = text.substr(comma + 1);
        std::stod(first, &consumed);
        if (consumed != first.size()) return "must be two comma-separated weights";
        std::stod(second, &consumed);
        if (consumed != second.size()) return "must be two comma-separated weights";
    } catch (const std::exception&) {
        return "must be two comma-separated weights";
    }
    return {};
}

SmoteConfig make_smote_config(const ResampleOptions& opt, SmoteKind kind) {
    SmoteConfig cfg;
    cfg.kind = kind;
    cfg.ratio = make_ratio(opt.ratio);
    cfg.seed = opt.seed;
    if (opt.k) cfg.k_neighbors = *opt.k;
    if (opt.m) cfg.m_neighbors = *opt.m;
    cfg.svm.lambda = opt.svm_lambda;
    cfg.svm.epochs = opt.svm_epochs;
    return cfg;
}

SamplerSpec build_spec(const ResampleOptions& opt) {
    const RatioSpec ratio = make_ratio(opt.ratio);
    const std::string& name = opt.method;
    if (name == "random-under")
        return RandomUnderConfig{ratio, opt.seed, opt.with_replacement};
    if (name == "cluster-centroids") return ClusterCentroidsConfig{ratio, opt.seed, {}};
    if (name == "nearmiss1" || name == "nearmiss2" || name == "nearmiss3") {
        NearMissConfig cfg;
        cfg.variant = name == "nearmiss1"   ? NearMissVariant::One
                      : name == "nearmiss2" ? NearMissVariant::Two
                                            : NearMissVariant::Three;
        cfg.ratio = ratio;
        if (opt.k) cfg.k = *opt.k;
        if (opt.m) cfg.m = *opt.m;
        cfg.seed = opt.seed;
        return cfg;
    }
    if (name == "iht") return InstanceHardnessConfig{ratio, opt.k.value_or(5), opt.seed};
    if (name == "tomek")
        return TomekLinksConfig{opt.tomek_remove == "both" ? TomekRemove::Both
                                                           : TomekRemove::MajorityOnly};
    if (name == "enn")
        return EnnConfig{opt.k.value_or(3), opt.enn_scope == "all" ? EnnScope::AllClasses
                                                                   : EnnScope::MajorityOnly};
    if (name == "cnn") return CnnConfig{opt.seed};
    if (name == "oss") return OssConfig{opt.seed};
    if (name == "ncr") return NcrConfig{opt.k.value_or(3)};
    if (name == "random-over") return RandomOverConfig{ratio, opt.seed};
    if (name == "smote") return make_smote_config(opt, SmoteKind::Regular);
    if (name == "smote-borderline1") return make_smote_config(opt, SmoteKind::Borderline1);
    if (name == "smote-borderline2") return make_smote_config(opt, SmoteKind::Borderline2);
    if (name == "smote-svm") return make_smote_config(opt, SmoteKind::Svm);
    if (name == "smote-tomek") return SmoteTomekConfig{make_smote_config(opt, SmoteKind::Regular)};
    return SmoteEnnConfig{make_smote_config(opt, SmoteKind::Regular), opt.enn_k};
}

int run_resample(const ResampleOptions& opt) {
    const Dataset input = read_csv(opt.input);
    const ResampleResult result = apply_sampler(input, build_spec(opt));
    write_csv(result.dataset, opt.output);
    return 0;
}

int run_ensemble(const EnsembleOptions& opt) {
    const Dataset input = read_csv(opt.input);
    const RatioSpec ratio = make_ratio(opt.ratio);
    EnsembleSets sets;
    if (opt.method == "easy") {
        sets = easy_ensemble(input, opt.n_subsets, ratio, opt.seed);
    } else {
        CascadeParams params;
        params.classifier =
            opt.classifier == "svm" ? CascadeClassifier::LinearSvm : CascadeClassifier::Knn;
        params.k = opt.k;
        params.svm.lambda = opt.svm_lambda;
        params.svm.epochs = opt.svm_epochs;
        sets = balance_cascade(input, opt.max_iter, params, ratio, opt.seed);
    }
    std::filesystem::create_directories(opt.out_dir);
    for (std::size_t i = 0; i < sets.subsets.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "subset_%03zu.csv", i);
        write_csv(sets.subsets[i].dataset, (std::filesystem::path(opt.out_dir) / name).string());
    }
    return 0;
}

int run_generate(const GenerateOptions& opt) {
    const std::size_t comma = opt.weights.find(',');
    const std::array<double, 2> weights{std::stod(opt.weights.substr(0, comma)),
                                        std::stod(opt.weights.substr(comma + 1))};
    const Dataset d =
        make_imbalanced(opt.n, opt.features, weights, opt.class_sep, opt.sigma, opt.seed);
    write_csv(d, opt.output);
    return 0;
}

int run_stats(const std::string& input) {
    const Dataset d = read_csv(input);
    const ClassStats stats = class_stats(d);
    std::cout << "minority=" << stats.minority_label << " n_min=" << stats.n_minority
              << " n_maj=" << stats.n_majority << " ratio=" << format_double(balancing_ratio(stats))
              << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"dataset rebalancing toolkit"};
    app.name("rebalance");
    app.require_subcommand(1);

    const CLI::Validator ratio_check(
        [](std::string& text) { return check_ratio_text(text); }, "auto or (0,1]");
    const CLI::Validator weights_check(
        [](std::string& text) { return check_weights_text(text); }, "W_MIN,W_MAJ");

    ResampleOptions res;
    std::size_t res_k = 0;
    std::size_t res_m = 0;
    auto* resample = app.add_subcommand("resample", "run one sampler on a CSV dataset");
    resample->add_option("--method", res.method, "resampling method")
        ->required()
        ->check(CLI::IsMember(kResampleMethods));
    resample->add_option("--ratio", res.ratio, "target balancing ratio")->check(ratio_check);
    resample->add_option("--seed", res.seed, "RNG seed");
    resample->add_option("-i,--input", res.input, "input CSV")->required();
    resample->add_option("-o,--output", res.output, "output CSV")->required();
    auto* opt_k = resample->add_option("--k", res_k, "neighbourhood size (method-specific)");
    auto* opt_m = resample->add_option("--m", res_m, "secondary neighbourhood size");
    resample->add_option("--enn-k", res.enn_k, "cleaning neighbourhood for smote-enn");
    resample->add_option("--tomek-remove", res.tomek_remove, "tomek removal scope")
        ->check(CLI::IsMember({"majority", "both"}));
    resample->add_option("--enn-scope", res.enn_scope, "enn removal scope")
        ->check(CLI::IsMember({"majority", "all"}));
    resample->add_option("--svm-lambda", res.svm_lambda, "Pegasos regularization");
    resample->add_option("--svm-epochs", res.svm_epochs, "Pegasos epochs");
    resample->add_flag("--with-replacement", res.with_replacement,
                       "sample majority rows with replacement");

    EnsembleOptions ens;
    auto* ensemble = app.add_subcommand("ensemble", "emit balanced subset files");
    ensemble->add_option("--method", ens.method, "ensemble builder")
        ->required()
        ->check(CLI::IsMember({"easy", "cascade"}));
    ensemble->add_option("--n-subsets", ens.n_subsets, "subsets for easy");
    ensemble->add_option("--max-iter", ens.max_iter, "iteration cap for cascade");
    ensemble->add_option("--ratio", ens.ratio, "per-subset balancing ratio")->check(ratio_check);
    ensemble->add_option("--seed", ens.seed, "master RNG seed");
    ensemble->add_option("-i,--input", ens.input, "input CSV")->required();
    ensemble->add_option("--out-dir", ens.out_dir, "output directory")->required();
    ensemble->add_option("--classifier", ens.classifier, "cascade classifier")
        ->check(CLI::IsMember({"knn", "svm"}));
    ensemble->add_option("--k", ens.k, "cascade knn neighbourhood");
    ensemble->add_option("--svm-lambda", ens.svm_lambda, "Pegasos regularization");
    ensemble->add_option("--svm-epochs", ens.svm_epochs, "Pegasos epochs");

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "write a synthetic imbalanced dataset");
    generate->add_option("--n", gen.n, "total sample count")->required();
    generate->add_option("--features", gen.features, "feature count")->required();
    generate->add_option("--weights", gen.weights, "minority,majority class weights")
        ->required()
        ->check(weights_check);
    generate->add_option("--class-sep", gen.class_sep, "half distance between class centres");
    generate->add_option("--sigma", gen.sigma, "per-class standard deviation");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("-o,--output", gen.output, "output CSV")->required();

    std::string stats_input;
    auto* stats = app.add_subcommand("stats", "print class counts and balancing ratio");
    stats->add_option("-i,--input", stats_input, "input CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (opt_k->count() > 0) res.k = res_k;
    if (opt_m->count() > 0) res.m = res_m;

    try {
        if (app.got_subcommand(resample)) return run_resample(res);
        if (app.got_subcommand(ensemble)) return run_ensemble(ens);
        if (app.got_subcommand(generate)) return run_generate(gen);
        return run_stats(stats_input);
    } catch (const std::exception& e) {
        std::cerr << "rebalance: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace rebalance
