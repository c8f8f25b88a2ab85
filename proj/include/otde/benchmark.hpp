#pragma once

#include "otde/dataset.hpp"
#include "otde/ensemble.hpp"
#include "otde/stats.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace otde {

enum class Metric { CCR, MAE, QWK, OneOff };

[[nodiscard]] std::string metric_name(Metric metric);
[[nodiscard]] bool lower_is_better(Metric metric);
inline constexpr Metric kAllMetrics[] = {Metric::MAE, Metric::QWK, Metric::CCR, Metric::OneOff};

struct RunRecord {
    std::string method;
    std::string dataset;
    int resample_seed = 0;
    double ccr = 0.0;
    double mae = 0.0;
    double qwk = 0.0;
    double one_off = 0.0;
    double fit_seconds = 0.0;
    double predict_seconds = 0.0;
    bool failed = false;
    std::string error;

    [[nodiscard]] double value(Metric metric) const;
};

struct MethodSpec {
    std::string name;
    EnsembleOptions options;
    /// Parameter space for a series length; defaults to ParameterSpace::defaults.
    std::function<ParameterSpace(std::size_t)> space;
};

struct DatasetSplit {
    std::string name;
    TimeSeriesDataset train;
    TimeSeriesDataset test;
};

/// Standard comparators: "ordinal" (weighted-median votes) and "nominal" (argmax votes).
[[nodiscard]] std::optional<MethodSpec> builtin_method(const std::string &name, const EnsembleOptions &base = {});

/**
 * Runs every (method, dataset, resample) triple. Resample r = 0 is the
 * original split, r > 0 the stratified resample with seed r; the search seed
 * is options.seed + r. Records come back in (method, dataset, resample) order
 * whatever the worker count. A run that throws yields a failed record.
 */
[[nodiscard]] std::vector<RunRecord> run_benchmark(const std::vector<MethodSpec> &methods,
                                                   const std::vector<DatasetSplit> &datasets,
                                                   std::size_t n_resamples, std::size_t jobs = 1);

/// Scores one fitted prediction vector.
[[nodiscard]] RunRecord score_run(std::string method, std::string dataset, int seed, std::span<const int> y_true,
                                  std::span<const int> y_pred, int num_classes);

struct MetricSummary {
    double mean = 0.0;
    double sd = 0.0; ///< sample standard deviation, 0 for a single run
    std::size_t runs = 0;
};

/// Mean and SD of one metric over the non-failed resamples of (method, dataset).
[[nodiscard]] std::optional<MetricSummary> summarize(const std::vector<RunRecord> &records, const std::string &method,
                                                     const std::string &dataset, Metric metric);

/// Rank table over per-dataset means, methods and datasets in first-appearance order.
/// Datasets lacking a successful run for some method are left out; none left throws IncompleteGrid.
[[nodiscard]] RankTable average_ranks(const std::vector<RunRecord> &records, Metric metric,
                                      TieMethod ties = TieMethod::Average);

void write_report(const std::filesystem::path &path, const std::vector<RunRecord> &records,
                  const std::vector<std::pair<std::string, std::string>> &metadata = {});
[[nodiscard]] std::vector<RunRecord> read_report(const std::filesystem::path &path);

/// Dataset rows by method columns, last row the average rank.
void write_rank_tsv(const std::filesystem::path &path, const RankTable &table);

/// Finds `<name>_TRAIN.<ext>` / `<name>_TEST.<ext>` pairs (`.ts` or `.csv`), sorted by name.
[[nodiscard]] std::vector<DatasetSplit> load_dataset_dir(const std::filesystem::path &dir);

} // namespace otde
