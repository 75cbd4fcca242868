#include "bitw/app.hpp"

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "bitw/dataset.hpp"
#include "bitw/errors.hpp"
#include "bitw/eval.hpp"
#include "bitw/feature_csv.hpp"
#include "bitw/pipeline.hpp"

namespace bitw {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct RunConfig {
    std::string dataset_root;
    std::string features_csv;
    std::string output_path;
    std::string wavelet = "haar";
    int levels = 3;
    int bins = 256;
    std::string classifier = "lda";
    int knn_k = 5;
    std::string split;  // holdout:F or kfold:K
    uint64_t seed = 42;
    int threads = 1;
};

DescriptorConfig descriptor_config(const RunConfig& cfg) {
    DescriptorConfig dc;
    dc.wavelet.family = wavelet_family_from_name(cfg.wavelet);
    dc.wavelet.levels = cfg.levels;
    dc.quant_bins = cfg.bins;
    return dc;
}

// Fans extraction out over cfg.threads workers; rows are emitted in
// manifest order regardless of completion order. Undecodable files are
// logged and skipped.
FeatureTable extract_table(const RunConfig& cfg, size_t* skipped) {
    const DatasetManifest manifest = scan_dataset(cfg.dataset_root);
    const DescriptorConfig dc = descriptor_config(cfg);

    const size_t n = manifest.samples.size();
    std::vector<std::vector<double>> rows(n);
    std::vector<std::string> errors(n);

    std::atomic<size_t> next{0};
    const int workers = std::max(1, cfg.threads);
    auto work = [&]() {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                ImageSample sample = load_image(manifest.samples[i].path);
                rows[i] = extract_bitw(sample, dc).values;
            } catch (const Error& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    FeatureTable table;
    table.feature_names = feature_names(dc.wavelet.levels);
    std::vector<size_t> kept;
    for (size_t i = 0; i < n; ++i) {
        if (!errors[i].empty()) {
            std::cerr << "error: " << manifest.samples[i].path.string() << ": "
                      << errors[i] << "\n";
            continue;
        }
        kept.push_back(i);
    }
    *skipped = n - kept.size();
    table.values.resize(static_cast<Eigen::Index>(kept.size()),
                        feature_count(dc.wavelet.levels));
    for (size_t r = 0; r < kept.size(); ++r) {
        const size_t i = kept[r];
        table.paths.push_back(
            manifest.samples[i].path.lexically_relative(cfg.dataset_root).string());
        table.labels.push_back(manifest.samples[i].label);
        for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
            table.values(static_cast<Eigen::Index>(r), c) = rows[i][c];
        }
    }
    return table;
}

int cmd_extract(const RunConfig& cfg) {
    size_t skipped = 0;
    const FeatureTable table = extract_table(cfg, &skipped);
    write_feature_csv(cfg.output_path, table);
    std::cout << "rows=" << table.paths.size() << " skipped=" << skipped
              << " out=" << cfg.output_path << "\n";
    return skipped == 0 ? kExitOk : kExitData;
}

ClassifierConfig classifier_config(const RunConfig& cfg) {
    ClassifierConfig clf;
    if (cfg.classifier == "lda") {
        clf.kind = ClassifierConfig::Kind::Lda;
    } else if (cfg.classifier == "knn") {
        clf.kind = ClassifierConfig::Kind::Knn;
        clf.knn_k = cfg.knn_k;
    } else {
        throw CLI::ValidationError("--classifier", "must be lda or knn");
    }
    return clf;
}

// Accepts "holdout:0.7" or "kfold:10"; empty picks the command default.
SplitSpec parse_split(const std::string& text, SplitMode fallback) {
    SplitSpec spec;
    spec.mode = fallback;
    if (text.empty()) return spec;
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "holdout") {
        spec.mode = SplitMode::Holdout;
        if (!arg.empty()) spec.train_fraction = std::stod(arg);
        if (spec.train_fraction <= 0.0 || spec.train_fraction >= 1.0) {
            throw CLI::ValidationError("--split", "holdout fraction must be in (0,1)");
        }
    } else if (kind == "kfold") {
        spec.mode = SplitMode::Kfold;
        if (!arg.empty()) spec.k = std::stoi(arg);
        if (spec.k < 2) {
            throw CLI::ValidationError("--split", "kfold needs k >= 2");
        }
    } else {
        throw CLI::ValidationError("--split", "expected holdout:F or kfold:K");
    }
    return spec;
}

FeatureTable load_features(const RunConfig& cfg) {
    if (!cfg.features_csv.empty()) {
        return read_feature_csv(cfg.features_csv);
    }
    if (cfg.dataset_root.empty()) {
        throw CLI::ValidationError("input", "need --features or --dataset");
    }
    size_t skipped = 0;
    return extract_table(cfg, &skipped);
}

void emit_report(const RunConfig& cfg, const EvalReport& report,
                 const std::vector<std::string>& classes, const SplitSpec& spec) {
    std::ostringstream out;
    out << "classifier=" << cfg.classifier << "\n";
    out << "seed=" << cfg.seed << "\n";
    if (spec.mode == SplitMode::Kfold) {
        out << "split=kfold:" << spec.k << "\n";
        out << "accuracy_sd=" << report.accuracy_sd << "\n";
    } else {
        out << "split=holdout:" << spec.train_fraction << "\n";
    }
    out << "accuracy=" << report.accuracy << "\n";
    out << "auc=" << report.auc << "\n";
    for (Eigen::Index r = 0; r < report.confusion.rows(); ++r) {
        out << "confusion." << classes[r] << "=";
        for (Eigen::Index c = 0; c < report.confusion.cols(); ++c) {
            out << (c ? "," : "") << report.confusion(r, c);
        }
        out << "\n";
    }
    std::cout << out.str();
    if (!cfg.output_path.empty()) {
        std::ofstream file(cfg.output_path);
        file << out.str();
    }
}

int cmd_eval(const RunConfig& cfg, SplitMode default_mode) {
    const FeatureTable table = load_features(cfg);
    const auto classes = table.classes();
    if (classes.size() < 2) {
        throw ClassTooSmallError("evaluation needs at least 2 classes");
    }
    const SplitSpec spec = parse_split(cfg.split, default_mode);
    const ClassifierConfig clf = classifier_config(cfg);

    EvalReport report;
    if (spec.mode == SplitMode::Kfold) {
        report = cross_validate(table.values, table.label_ids(),
                                static_cast<int>(classes.size()), spec.k,
                                cfg.seed, clf);
    } else {
        report = holdout_evaluate(table.values, table.label_ids(),
                                  static_cast<int>(classes.size()),
                                  spec.train_fraction, cfg.seed, clf);
    }
    emit_report(cfg, report, classes, spec);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"BiTW texture descriptor: batch extraction and evaluation"};
    app.require_subcommand(1);

    RunConfig cfg;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--wavelet", cfg.wavelet, "Wavelet family")
            ->check(CLI::IsMember({"haar", "db1", "db2", "db4"}))
            ->envname("BITW_WAVELET");
        cmd->add_option("--levels", cfg.levels, "Decomposition levels")
            ->check(CLI::PositiveNumber)
            ->envname("BITW_LEVELS");
        cmd->add_option("--bins", cfg.bins, "Subband quantization bins")
            ->check(CLI::Range(2, 1 << 16))
            ->envname("BITW_BINS");
        cmd->add_option("--seed", cfg.seed, "RNG seed")->envname("BITW_SEED");
        cmd->add_option("--threads", cfg.threads, "Worker threads")
            ->check(CLI::PositiveNumber)
            ->envname("BITW_THREADS");
    };
    const auto add_eval = [&](CLI::App* cmd) {
        cmd->add_option("--dataset", cfg.dataset_root, "Dataset root directory")
            ->envname("BITW_DATASET");
        cmd->add_option("--features", cfg.features_csv, "Precomputed feature CSV")
            ->envname("BITW_FEATURES");
        cmd->add_option("--out", cfg.output_path, "Report output path")
            ->envname("BITW_OUT");
        cmd->add_option("--classifier", cfg.classifier, "Classifier")
            ->check(CLI::IsMember({"lda", "knn"}))
            ->envname("BITW_CLASSIFIER");
        cmd->add_option("--knn-k", cfg.knn_k, "Neighbors for knn")
            ->check(CLI::PositiveNumber)
            ->envname("BITW_KNN_K");
        cmd->add_option("--split", cfg.split, "holdout:F or kfold:K")
            ->envname("BITW_SPLIT");
        add_common(cmd);
    };

    CLI::App* extract = app.add_subcommand("extract", "Extract features to CSV");
    extract->add_option("--dataset", cfg.dataset_root, "Dataset root directory")
        ->required()
        ->envname("BITW_DATASET");
    extract->add_option("--out", cfg.output_path, "Output CSV path")
        ->required()
        ->envname("BITW_OUT");
    add_common(extract);

    CLI::App* eval = app.add_subcommand("eval", "Holdout evaluation");
    add_eval(eval);
    CLI::App* cv = app.add_subcommand("cv", "k-fold cross validation");
    add_eval(cv);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (extract->parsed()) return cmd_extract(cfg);
        if (eval->parsed()) return cmd_eval(cfg, SplitMode::Holdout);
        return cmd_eval(cfg, SplitMode::Kfold);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace bitw
