#include "otde/cli.hpp"

#include "otde/benchmark.hpp"
#include "otde/cdd.hpp"
#include "otde/discretize.hpp"
#include "otde/error.hpp"
#include "otde/metrics.hpp"
#include "otde/serialization.hpp"
#include "otde/ts_format.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace otde::cli {

namespace fs = std::filesystem;

namespace {

/// Input problem that is not an otde::Error (missing file, bad flag value).
struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void diagnose(std::ostream &err, const std::string &kind, const std::string &message) {
    err << nlohmann::json{{"level", "error"}, {"kind", kind}, {"message", message}}.dump() << '\n';
}

std::string normalize_key(std::string key) {
    std::replace(key.begin(), key.end(), '-', '_');
    return key;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

void require_input(const std::string &path) {
    if (!fs::exists(path)) {
        throw BadInput("input not found: " + path);
    }
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::vector<double> parse_doubles(const std::string &text, const std::string &flag) {
    std::vector<double> out;
    for (const auto &item : split_list(text)) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw BadInput(flag + ": not a number: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

std::vector<bool> parse_bools(const std::vector<std::string> &items, const std::string &flag) {
    std::vector<bool> out;
    for (const auto &item : items) {
        if (item == "true" || item == "1") {
            out.push_back(true);
        } else if (item == "false" || item == "0") {
            out.push_back(false);
        } else {
            throw BadInput(flag + ": expected true/false, got '" + item + "'");
        }
    }
    return out;
}

/// Flags shared by `fit` and `benchmark`.
struct SearchFlags {
    EnsembleOptions options;
    std::string mode = "ordinal";
    std::string distance = "intersection";
    std::vector<int> window_lengths;
    std::vector<int> coefficient_counts;
    std::vector<int> alphabet_sizes;
    std::vector<std::string> normalize_options;
    std::vector<std::string> numerosity_options;

    void attach(CLI::App &app) {
        app.add_option("--n_initial,--n-initial", options.n_initial, "random configurations before guidance")
            ->capture_default_str();
        app.add_option("--n_evals,--n-evals", options.n_evals, "total configuration evaluations")
            ->capture_default_str();
        app.add_option("--ensemble_size,--ensemble-size", options.ensemble_size, "members kept")
            ->capture_default_str();
        app.add_option("--candidate_pool,--candidate-pool", options.candidate_pool, "unseen configurations scored per step")
            ->capture_default_str();
        app.add_option("--length_scale,--length-scale", options.length_scale, "GP kernel length scale")
            ->capture_default_str();
        app.add_option("--noise_variance,--noise-variance", options.noise_variance, "GP noise variance")
            ->capture_default_str();
        app.add_option("--weight_exponent,--weight-exponent", options.weight_exponent, "member weight exponent")
            ->capture_default_str();
        app.add_option("--subsample_fraction,--subsample-fraction", options.subsample_fraction,
                       "training fraction used for leave-one-out scoring")
            ->capture_default_str();
        app.add_option("--seed", options.seed, "search seed")->capture_default_str();
        app.add_option("--mode", mode, "vote combination")
            ->check(CLI::IsMember({"ordinal", "nominal"}))
            ->capture_default_str();
        app.add_option("--distance", distance, "histogram distance")
            ->check(CLI::IsMember({"intersection", "squared_difference"}))
            ->capture_default_str();
        app.add_option("--window_lengths,--window-lengths", window_lengths, "comma-separated w values")
            ->delimiter(',');
        app.add_option("--coefficient_counts,--coefficient-counts", coefficient_counts, "comma-separated c values")
            ->delimiter(',');
        app.add_option("--alphabet_sizes,--alphabet-sizes", alphabet_sizes, "comma-separated T values")
            ->delimiter(',');
        app.add_option("--normalize_options,--normalize-options", normalize_options, "subset of true,false")
            ->delimiter(',');
        app.add_option("--numerosity_options,--numerosity-options", numerosity_options, "subset of true,false")
            ->delimiter(',');
    }

    [[nodiscard]] EnsembleOptions resolved_options() const {
        auto o = options;
        o.mode = parse_vote_mode(mode);
        o.distance = parse_distance(distance);
        return o;
    }

    [[nodiscard]] ParameterSpace space(std::size_t length) const {
        auto s = ParameterSpace::defaults(length);
        if (!window_lengths.empty()) {
            s.window_lengths = window_lengths;
        }
        if (!coefficient_counts.empty()) {
            s.coefficient_counts = coefficient_counts;
        }
        if (!alphabet_sizes.empty()) {
            s.alphabet_sizes = alphabet_sizes;
        }
        if (!normalize_options.empty()) {
            s.normalize_options = parse_bools(normalize_options, "--normalize_options");
        }
        if (!numerosity_options.empty()) {
            s.numerosity_options = parse_bools(numerosity_options, "--numerosity_options");
        }
        return s;
    }

    void validate() const {
        parse_bools(normalize_options, "--normalize_options");
        parse_bools(numerosity_options, "--numerosity_options");
        if (options.n_evals < 1 || options.ensemble_size < 1 || options.candidate_pool < 1) {
            throw BadInput("n_evals, ensemble_size and candidate_pool must be at least 1");
        }
        if (!(options.subsample_fraction > 0.0 && options.subsample_fraction <= 1.0)) {
            throw BadInput("subsample_fraction must be in (0, 1]");
        }
        if (!(options.length_scale > 0.0) || !(options.noise_variance >= 0.0)) {
            throw BadInput("length_scale must be positive and noise_variance non-negative");
        }
    }
};

/// Test data may be unlabelled `.ts`; labels are then absent.
struct PredictInput {
    std::vector<Series> series;
    std::optional<std::vector<int>> labels;
};

PredictInput load_predict_input(const fs::path &path, const std::vector<std::string> &model_classes) {
    PredictInput input;
    std::optional<TimeSeriesDataset> labelled;
    if (path.extension() == ".ts") {
        std::ifstream in(path);
        if (!in) {
            throw BadInput("cannot open " + path.string());
        }
        auto contents = parse_ts_contents(in);
        if (!contents.class_tokens) {
            input.series = std::move(contents.series);
            return input;
        }
        std::ifstream again(path);
        labelled = parse_ts_text(again);
    } else {
        labelled = read_dataset(path);
    }
    input.series = labelled->series();
    std::vector<int> mapped;
    for (int y : labelled->labels()) {
        const auto &name = labelled->class_names()[static_cast<std::size_t>(y)];
        const auto it = std::find(model_classes.begin(), model_classes.end(), name);
        if (it == model_classes.end()) {
            throw Error(ErrorKind::UnknownLabel, "class '" + name + "' was not seen in training");
        }
        mapped.push_back(static_cast<int>(it - model_classes.begin()));
    }
    input.labels = std::move(mapped);
    return input;
}

void write_text(const fs::path &path, const std::string &body) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body) || !out.flush()) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
}

/// Rank TSV plus CDD (SVG + TSV) per metric, named `<prefix>.ranks_<metric>.tsv` and `<prefix>.cdd_<metric>.svg`.
void emit_analysis(const std::vector<RunRecord> &records, const fs::path &prefix, std::ostream &out) {
    std::vector<RunRecord> ok;
    std::copy_if(records.begin(), records.end(), std::back_inserter(ok), [](const RunRecord &r) { return !r.failed; });
    for (Metric metric : kAllMetrics) {
        const auto name = metric_name(metric);
        const auto table = average_ranks(ok, metric);
        const auto tests = pairwise_wilcoxon(table);
        const auto cliques = form_cliques(table, tests.adjusted_p, kCliqueAlpha);
        const fs::path ranks_path = prefix.string() + ".ranks_" + name + ".tsv";
        const fs::path cdd_path = prefix.string() + ".cdd_" + name + ".svg";
        write_rank_tsv(ranks_path, table);
        emit_cdd(table, cliques, cdd_path, name);
        out << name << "_ranks";
        for (std::size_t m = 0; m < table.methods.size(); ++m) {
            out << ' ' << table.methods[m] << '=' << format_double(table.average_ranks[m]);
        }
        out << '\n';
    }
}

int cmd_fit(const std::string &train_path, const std::string &model_out, const SearchFlags &flags, std::ostream &out) {
    flags.validate();
    require_input(train_path);
    const auto train = read_dataset(train_path);
    const auto space = flags.space(train.length());
    const auto ensemble = guided_search(train, space, flags.resolved_options());
    save_ensemble(ensemble, model_out);
    out << "members=" << ensemble.members().size()
        << " best_loo_mae=" << format_double(ensemble.members().front().train_mae)
        << " evaluations=" << ensemble.history().size() << '\n';
    return kExitOk;
}

int cmd_predict(const std::string &model_path, const std::string &data_path, const std::string &out_path,
                const std::string &mode, std::ostream &out) {
    require_input(model_path);
    require_input(data_path);
    auto ensemble = load_ensemble(model_path);
    if (!mode.empty()) {
        ensemble = ensemble.with_mode(parse_vote_mode(mode));
    }
    const auto input = load_predict_input(data_path, ensemble.class_names());
    std::vector<int> predicted;
    predicted.reserve(input.series.size());
    for (const auto &s : input.series) {
        if (s.dims() != ensemble.dims() || s.length() != ensemble.length()) {
            throw Error(ErrorKind::ShapeMismatch, "test series shape differs from the training data");
        }
        predicted.push_back(ensemble.predict(s));
    }
    std::ostringstream labels;
    for (int y : predicted) {
        const auto &names = ensemble.class_names();
        labels << (static_cast<std::size_t>(y) < names.size() ? names[static_cast<std::size_t>(y)] : std::to_string(y))
               << '\n';
    }
    if (out_path.empty()) {
        out << labels.str();
    } else {
        write_text(out_path, labels.str());
    }
    if (input.labels) {
        const auto &y = *input.labels;
        out << "instances=" << y.size() << '\n';
        out << "ccr=" << format_double(ccr(y, predicted)) << '\n';
        out << "mae=" << format_double(mae(y, predicted)) << '\n';
        out << "qwk=" << format_double(qwk(y, predicted, ensemble.num_classes())) << '\n';
        out << "one_off=" << format_double(one_off(y, predicted)) << '\n';
    }
    return kExitOk;
}

int cmd_benchmark(const std::string &dir, const std::string &methods_text, std::size_t resamples,
                  const std::string &report_out, std::size_t jobs, const SearchFlags &flags, std::ostream &out,
                  std::ostream &err) {
    flags.validate();
    if (!fs::is_directory(dir)) {
        throw BadInput("not a directory: " + dir);
    }
    if (resamples < 1) {
        throw BadInput("--resamples must be at least 1");
    }
    const auto datasets = load_dataset_dir(dir);
    if (datasets.empty()) {
        throw BadInput("no <name>_TRAIN/<name>_TEST pairs in " + dir);
    }
    std::vector<MethodSpec> methods;
    for (const auto &name : split_list(methods_text)) {
        auto spec = builtin_method(name, flags.resolved_options());
        if (!spec) {
            throw BadInput("unknown method '" + name + "' (expected ordinal or nominal)");
        }
        spec->space = [&flags](std::size_t length) { return flags.space(length); };
        methods.push_back(std::move(*spec));
    }
    if (methods.empty()) {
        throw BadInput("--methods is empty");
    }

    const auto records = run_benchmark(methods, datasets, resamples, jobs);
    write_report(report_out, records,
                 {{"datasets_dir", dir},
                  {"methods", methods_text},
                  {"resamples", std::to_string(resamples)},
                  {"seed", std::to_string(flags.options.seed)}});
    const auto failed = static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const RunRecord &r) { return r.failed; }));
    for (const auto &r : records) {
        if (r.failed) {
            err << nlohmann::json{{"level", "warning"},
                                  {"kind", "RunFailed"},
                                  {"method", r.method},
                                  {"dataset", r.dataset},
                                  {"resample", r.resample_seed},
                                  {"message", r.error}}
                       .dump()
                << '\n';
        }
    }
    out << "runs=" << records.size() << " failed=" << failed << '\n';
    if (failed == records.size()) {
        diagnose(err, "AllRunsFailed", "every benchmark run failed");
        return kExitBadInput;
    }
    fs::path prefix = report_out;
    prefix.replace_extension();
    emit_analysis(records, prefix, out);
    return kExitOk;
}

int cmd_rank(const std::string &report_path, const std::string &out_prefix, std::ostream &out) {
    require_input(report_path);
    std::vector<RunRecord> records;
    try {
        records = read_report(report_path);
    } catch (const nlohmann::json::exception &e) {
        throw BadInput(report_path + ": " + e.what());
    }
    fs::path prefix = out_prefix;
    if (prefix.empty()) {
        prefix = report_path;
        prefix.replace_extension();
    }
    emit_analysis(records, prefix, out);
    return kExitOk;
}

std::vector<double> read_prices(const fs::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw BadInput("cannot open " + path.string());
    }
    std::vector<double> prices;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto field = trim(line.substr(line.rfind(',') == std::string::npos ? 0 : line.rfind(',') + 1));
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size()) {
            if (prices.empty() && line_no == 1) {
                continue; // header row
            }
            throw BadInput(path.string() + ":" + std::to_string(line_no) + ": not a price: '" + field + "'");
        }
        prices.push_back(v);
    }
    return prices;
}

int cmd_financial(const std::string &prices_path, std::size_t lookback, const std::string &thresholds_text,
                  const std::string &out_path, const std::string &test_out, double test_fraction, std::ostream &out) {
    require_input(prices_path);
    const auto thresholds = parse_doubles(thresholds_text, "--thresholds");
    const auto prices = read_prices(prices_path);
    auto windows = build_return_windows(prices, lookback);
    const auto labels = discretize_thresholds(windows.targets, thresholds);
    const int k = static_cast<int>(thresholds.size()) + 1;
    const auto name = fs::path(prices_path).stem().string();

    std::size_t n_train = windows.series.size();
    if (!test_out.empty()) {
        if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
            throw BadInput("--test_fraction must be in (0, 1)");
        }
        n_train = static_cast<std::size_t>(
            std::llround(static_cast<double>(windows.series.size()) * (1.0 - test_fraction)));
        if (n_train < 1 || n_train >= windows.series.size()) {
            throw BadInput("chronological split leaves an empty side");
        }
    }
    std::vector<Series> train_series(windows.series.begin(), windows.series.begin() + static_cast<std::ptrdiff_t>(n_train));
    std::vector<int> train_labels(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n_train));
    write_dataset(out_path, TimeSeriesDataset(name, std::move(train_series), std::move(train_labels), k));
    if (!test_out.empty()) {
        std::vector<Series> test_series(windows.series.begin() + static_cast<std::ptrdiff_t>(n_train), windows.series.end());
        std::vector<int> test_labels(labels.begin() + static_cast<std::ptrdiff_t>(n_train), labels.end());
        write_dataset(test_out, TimeSeriesDataset(name, std::move(test_series), std::move(test_labels), k));
    }
    out << "instances=" << windows.series.size() << " train=" << n_train
        << " test=" << windows.series.size() - n_train << " classes=" << k << '\n';
    return kExitOk;
}

RegressionDataset read_regression(const std::string &path) {
    require_input(path);
    std::ifstream in(path);
    if (!in) {
        throw BadInput("cannot open " + path);
    }
    return parse_ts_regression(in);
}

int cmd_discretize(const std::string &input, const std::string &test_input, int bins, const std::string &out_path,
                   const std::string &test_out, std::ostream &out) {
    if (!test_input.empty() && test_out.empty()) {
        throw BadInput("--test requires --test_out");
    }
    auto train = read_regression(input);
    const auto edges = fit_equal_width(train.targets, bins);
    auto label_all = [&edges](const std::vector<double> &targets) {
        std::vector<int> labels;
        for (double t : targets) {
            labels.push_back(edges.label(t));
        }
        return labels;
    };
    write_dataset(out_path, TimeSeriesDataset(train.name, std::move(train.series), label_all(train.targets), bins));
    std::size_t n_test = 0;
    if (!test_input.empty()) {
        auto test = read_regression(test_input);
        n_test = test.series.size();
        write_dataset(test_out, TimeSeriesDataset(test.name, std::move(test.series), label_all(test.targets), bins));
    }
    out << "train=" << train.targets.size() << " test=" << n_test << " bins=" << bins
        << " min=" << format_double(edges.min) << " max=" << format_double(edges.max) << '\n';
    return kExitOk;
}

/// Appends config entries for keys the command line does not already set.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (config_path.empty()) {
        return args;
    }
    std::ifstream in(config_path);
    if (!in) {
        throw BadInput("cannot open config file " + config_path);
    }
    std::stringstream text;
    text << in.rdbuf();
    std::vector<std::string> given;
    for (const auto &a : args) {
        if (a.rfind("--", 0) == 0) {
            given.push_back(normalize_key(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2)));
        }
    }
    for (const auto &[key, value] : parse_config(text.str())) {
        if (std::find(given.begin(), given.end(), key) == given.end()) {
            args.push_back("--" + key + "=" + value);
        }
    }
    return args;
}

} // namespace

std::vector<std::pair<std::string, std::string>> parse_config(const std::string &text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || trim(line.substr(0, eq)).empty()) {
            throw BadInput("config line " + std::to_string(line_no) + ": expected key=value");
        }
        entries.emplace_back(normalize_key(trim(line.substr(0, eq))), trim(line.substr(eq + 1)));
    }
    return entries;
}

int run(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Ordinal temporal dictionary ensemble for time series ordinal classification", "otde"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "help for every subcommand");
    app.add_option("--config", "flat key=value file; command-line flags take precedence");

    SearchFlags fit_flags;
    std::string train_path, model_out;
    auto *fit = app.add_subcommand("fit", "build an ensemble from a training dataset");
    fit->add_option("--train", train_path, "training dataset (.ts or .csv)")->required();
    fit->add_option("--model_out,--model-out", model_out, "ensemble manifest to write")->required();
    fit_flags.attach(*fit);

    std::string model_path, data_path, out_path, predict_mode;
    auto *predict = app.add_subcommand("predict", "label a dataset with a saved ensemble");
    predict->add_option("--model", model_path, "ensemble manifest")->required();
    predict->add_option("--data", data_path, "dataset to label")->required();
    predict->add_option("--out", out_path, "prediction file, one label per line (stdout if omitted)");
    predict->add_option("--mode", predict_mode, "override the stored vote combination")
        ->check(CLI::IsMember({"ordinal", "nominal"}));

    SearchFlags bench_flags;
    std::string datasets_dir, methods = "ordinal,nominal", report_out = "report.json";
    std::size_t resamples = 30, jobs = 1;
    auto *bench = app.add_subcommand("benchmark", "resampled comparison over a directory of datasets");
    bench->add_option("--datasets_dir,--datasets-dir", datasets_dir, "directory of <name>_TRAIN/<name>_TEST files")
        ->required();
    bench->add_option("--methods", methods, "comma-separated methods (ordinal, nominal)")->capture_default_str();
    bench->add_option("--resamples", resamples, "resamples per dataset, the first being the given split")
        ->capture_default_str();
    bench->add_option("--report_out,--report-out", report_out, "JSON report; rank and CDD files go beside it")
        ->capture_default_str();
    bench->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    bench_flags.attach(*bench);

    std::string report_in, rank_prefix;
    auto *rank = app.add_subcommand("rank", "rank tables and CDDs from an existing report");
    rank->add_option("--report", report_in, "benchmark report JSON")->required();
    rank->add_option("--out_prefix,--out-prefix", rank_prefix, "output prefix (report path without extension)");

    auto *make = app.add_subcommand("make-dataset", "build ordinal datasets");
    make->require_subcommand(1);
    std::string prices_path, thresholds = "-0.05,-0.02,0.02,0.05", fin_out, fin_test_out;
    std::size_t lookback = 53;
    double test_fraction = 0.3;
    auto *financial = make->add_subcommand("financial", "return windows labelled by the next return");
    financial->add_option("--prices", prices_path, "CSV of prices, last column used")->required();
    financial->add_option("--lookback", lookback, "returns per window")->capture_default_str();
    financial->add_option("--thresholds", thresholds, "ascending cut points")->capture_default_str();
    financial->add_option("--out", fin_out, "dataset to write")->required();
    financial->add_option("--test_out,--test-out", fin_test_out, "latest windows go here (chronological split)");
    financial->add_option("--test_fraction,--test-fraction", test_fraction, "share of windows in --test_out")
        ->capture_default_str();

    std::string reg_input, reg_test, disc_out, disc_test_out;
    int bins = kDefaultTargetBins;
    auto *discretize = make->add_subcommand("discretize", "equal-width binning of a real-valued target");
    discretize->add_option("--input", reg_input, "regression .ts (training pool fixes the bin edges)")->required();
    discretize->add_option("--test", reg_test, "regression .ts binned with the training edges");
    discretize->add_option("--bins", bins, "number of bins")->capture_default_str();
    discretize->add_option("--out", disc_out, "dataset to write")->required();
    discretize->add_option("--test_out,--test-out", disc_test_out, "binned test dataset");

    try {
        auto args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (fit->parsed()) {
            return cmd_fit(train_path, model_out, fit_flags, out);
        }
        if (predict->parsed()) {
            return cmd_predict(model_path, data_path, out_path, predict_mode, out);
        }
        if (bench->parsed()) {
            return cmd_benchmark(datasets_dir, methods, resamples, report_out, jobs, bench_flags, out, err);
        }
        if (rank->parsed()) {
            return cmd_rank(report_in, rank_prefix, out);
        }
        if (financial->parsed()) {
            return cmd_financial(prices_path, lookback, thresholds, fin_out, fin_test_out, test_fraction, out);
        }
        if (discretize->parsed()) {
            return cmd_discretize(reg_input, reg_test, bins, disc_out, disc_test_out, out);
        }
        diagnose(err, "UsageError", "no command given");
        return kExitBadInput;
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        diagnose(err, "UsageError", e.what());
        return kExitBadInput;
    } catch (const BadInput &e) {
        diagnose(err, "InvalidArgument", e.what());
        return kExitBadInput;
    } catch (const Error &e) {
        diagnose(err, std::string(to_string(e.kind())), e.what());
        return e.kind() == ErrorKind::IoError ? kExitIo : kExitBadInput;
    } catch (const fs::filesystem_error &e) {
        diagnose(err, "IoError", e.what());
        return kExitIo;
    } catch (const std::exception &e) {
        diagnose(err, "InternalError", e.what());
        return kExitBadInput;
    }
}

} // namespace otde::cli
