#include "otde/benchmark.hpp"

#include "otde/error.hpp"
#include "otde/metrics.hpp"
#include "otde/ts_format.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <thread>

namespace otde {

using nlohmann::json;

std::string metric_name(Metric metric) {
    switch (metric) {
    case Metric::CCR: return "ccr";
    case Metric::MAE: return "mae";
    case Metric::QWK: return "qwk";
    case Metric::OneOff: return "one_off";
    }
    return "unknown";
}

bool lower_is_better(Metric metric) { return metric == Metric::MAE; }

double RunRecord::value(Metric metric) const {
    switch (metric) {
    case Metric::CCR: return ccr;
    case Metric::MAE: return mae;
    case Metric::QWK: return qwk;
    case Metric::OneOff: return one_off;
    }
    return 0.0;
}

std::optional<MethodSpec> builtin_method(const std::string &name, const EnsembleOptions &base) {
    MethodSpec spec{name, base, {}};
    if (name == "ordinal") {
        spec.options.mode = VoteMode::Ordinal;
    } else if (name == "nominal") {
        spec.options.mode = VoteMode::Nominal;
    } else {
        return std::nullopt;
    }
    return spec;
}

RunRecord score_run(std::string method, std::string dataset, int seed, std::span<const int> y_true,
                    std::span<const int> y_pred, int num_classes) {
    RunRecord r;
    r.method = std::move(method);
    r.dataset = std::move(dataset);
    r.resample_seed = seed;
    r.ccr = ccr(y_true, y_pred);
    r.mae = mae(y_true, y_pred);
    r.qwk = qwk(y_true, y_pred, num_classes);
    r.one_off = one_off(y_true, y_pred);
    return r;
}

namespace {

RunRecord run_one(const MethodSpec &method, const DatasetSplit &data, std::size_t resample) {
    using clock = std::chrono::steady_clock;
    try {
        auto [train, test] = stratified_resample(data.train, data.test, ResampleSpec{resample});
        auto options = method.options;
        options.seed += resample;
        const auto space = method.space ? method.space(train.length()) : ParameterSpace::defaults(train.length());

        const auto t0 = clock::now();
        const auto ensemble = guided_search(train, space, options);
        const auto t1 = clock::now();
        const auto predicted = ensemble.predict_dataset(test);
        const auto t2 = clock::now();

        auto record = score_run(method.name, data.name, static_cast<int>(resample), test.labels(), predicted,
                                train.num_classes());
        record.fit_seconds = std::chrono::duration<double>(t1 - t0).count();
        record.predict_seconds = std::chrono::duration<double>(t2 - t1).count();
        return record;
    } catch (const std::exception &e) {
        RunRecord failed;
        failed.method = method.name;
        failed.dataset = data.name;
        failed.resample_seed = static_cast<int>(resample);
        failed.failed = true;
        failed.error = e.what();
        return failed;
    }
}

} // namespace

std::vector<RunRecord> run_benchmark(const std::vector<MethodSpec> &methods, const std::vector<DatasetSplit> &datasets,
                                     std::size_t n_resamples, std::size_t jobs) {
    if (n_resamples < 1) {
        throw Error(ErrorKind::InvalidArgument, "n_resamples must be at least 1");
    }
    struct Task {
        std::size_t method, dataset, resample;
    };
    std::vector<Task> tasks;
    for (std::size_t m = 0; m < methods.size(); ++m) {
        for (std::size_t d = 0; d < datasets.size(); ++d) {
            for (std::size_t r = 0; r < n_resamples; ++r) {
                tasks.push_back({m, d, r});
            }
        }
    }
    std::vector<RunRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const auto &t = tasks[i];
            records[i] = run_one(methods[t.method], datasets[t.dataset], t.resample);
        }
    };
    jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
    }
    return records;
}

std::optional<MetricSummary> summarize(const std::vector<RunRecord> &records, const std::string &method,
                                       const std::string &dataset, Metric metric) {
    std::vector<double> values;
    for (const auto &r : records) {
        if (!r.failed && r.method == method && r.dataset == dataset) {
            values.push_back(r.value(metric));
        }
    }
    if (values.empty()) {
        return std::nullopt;
    }
    MetricSummary s;
    s.runs = values.size();
    for (double v : values) {
        s.mean += v;
    }
    s.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

RankTable average_ranks(const std::vector<RunRecord> &records, Metric metric, TieMethod ties) {
    std::vector<std::string> methods, datasets;
    auto remember = [](std::vector<std::string> &seen, const std::string &name) {
        if (std::find(seen.begin(), seen.end(), name) == seen.end()) {
            seen.push_back(name);
        }
    };
    for (const auto &r : records) {
        remember(methods, r.method);
        remember(datasets, r.dataset);
    }
    // datasets on which some method never succeeded drop out of the comparison
    std::vector<std::string> complete;
    std::vector<std::vector<double>> grid;
    for (const auto &d : datasets) {
        std::vector<double> row;
        for (const auto &m : methods) {
            const auto s = summarize(records, m, d, metric);
            if (!s) {
                break;
            }
            row.push_back(s->mean);
        }
        if (row.size() == methods.size()) {
            complete.push_back(d);
            grid.push_back(std::move(row));
        }
    }
    if (complete.empty()) {
        throw Error(ErrorKind::IncompleteGrid, "no dataset has a successful run for every method");
    }
    return rank_grid(std::move(methods), std::move(complete), std::move(grid), lower_is_better(metric), ties);
}

void write_report(const std::filesystem::path &path, const std::vector<RunRecord> &records,
                  const std::vector<std::pair<std::string, std::string>> &metadata) {
    json meta = json::object();
    for (const auto &[k, v] : metadata) {
        meta[k] = v;
    }
    std::size_t failed = 0;
    json rows = json::array();
    for (const auto &r : records) {
        failed += r.failed;
        rows.push_back(json{{"method", r.method},
                            {"dataset", r.dataset},
                            {"resample_seed", r.resample_seed},
                            {"ccr", r.ccr},
                            {"mae", r.mae},
                            {"qwk", r.qwk},
                            {"one_off", r.one_off},
                            {"fit_seconds", r.fit_seconds},
                            {"predict_seconds", r.predict_seconds},
                            {"failed", r.failed},
                            {"error", r.error}});
    }
    meta["failed_runs"] = failed;
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    out << json{{"metadata", meta}, {"records", rows}}.dump(1) << '\n';
}

std::vector<RunRecord> read_report(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string());
    }
    const auto j = json::parse(in);
    std::vector<RunRecord> records;
    for (const auto &row : j.at("records")) {
        RunRecord r;
        row.at("method").get_to(r.method);
        row.at("dataset").get_to(r.dataset);
        row.at("resample_seed").get_to(r.resample_seed);
        row.at("ccr").get_to(r.ccr);
        row.at("mae").get_to(r.mae);
        row.at("qwk").get_to(r.qwk);
        row.at("one_off").get_to(r.one_off);
        row.at("fit_seconds").get_to(r.fit_seconds);
        row.at("predict_seconds").get_to(r.predict_seconds);
        row.at("failed").get_to(r.failed);
        row.at("error").get_to(r.error);
        records.push_back(std::move(r));
    }
    return records;
}

void write_rank_tsv(const std::filesystem::path &path, const RankTable &table) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    }
    out << "dataset";
    for (const auto &m : table.methods) {
        out << '\t' << m;
    }
    out << '\n';
    char buf[32];
    for (std::size_t d = 0; d < table.datasets.size(); ++d) {
        out << table.datasets[d];
        for (double r : table.ranks[d]) {
            std::snprintf(buf, sizeof(buf), "%.3f", r);
            out << '\t' << buf;
        }
        out << '\n';
    }
    out << "average_rank";
    for (double r : table.average_ranks) {
        std::snprintf(buf, sizeof(buf), "%.6f", r);
        out << '\t' << buf;
    }
    out << '\n';
}

std::vector<DatasetSplit> load_dataset_dir(const std::filesystem::path &dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw Error(ErrorKind::IoError, dir.string() + " is not a directory");
    }
    std::map<std::string, std::pair<fs::path, fs::path>> found;
    for (const auto &entry : fs::directory_iterator(dir)) {
        const auto ext = entry.path().extension().string();
        if (ext != ".ts" && ext != ".csv") {
            continue;
        }
        const auto stem = entry.path().stem().string();
        const auto cut = stem.rfind('_');
        if (cut == std::string::npos) {
            continue;
        }
        const auto part = stem.substr(cut + 1);
        if (part == "TRAIN") {
            found[stem.substr(0, cut)].first = entry.path();
        } else if (part == "TEST") {
            found[stem.substr(0, cut)].second = entry.path();
        }
    }
    std::vector<DatasetSplit> out;
    for (const auto &[name, paths] : found) {
        if (paths.first.empty() || paths.second.empty()) {
            continue;
        }
        out.push_back({name, read_dataset(paths.first), read_dataset(paths.second)});
    }
    return out;
}

} // namespace otde
