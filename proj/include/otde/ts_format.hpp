#pragma once

#include "otde/dataset.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace otde {

/**
 * Everything a `.ts` file can carry, before labels are mapped to classes.
 *
 * Exactly one of class_tokens / targets is populated when the header declares
 * `@classLabel true` / `@targetLabel true`; both stay empty for unlabeled data.
 */
struct TsContents {
    std::string name;
    std::size_t dims = 0;
    std::size_t length = 0;
    std::vector<Series> series;
    std::optional<std::vector<std::string>> class_tokens;
    std::vector<std::string> record_labels;
    std::vector<double> targets;
};

/** Series paired with a real-valued target (extrinsic regression data). */
struct RegressionDataset {
    std::string name;
    std::vector<Series> series;
    std::vector<double> targets;
};

[[nodiscard]] TsContents parse_ts_contents(std::istream &in);

/// Labeled `.ts` text. Labels are re-encoded by ascending class token order
/// (numeric when every token is numeric, lexical otherwise).
[[nodiscard]] TimeSeriesDataset parse_ts_text(std::istream &in);
[[nodiscard]] TimeSeriesDataset parse_ts_text(const std::string &text);

/// `.ts` text declaring `@targetLabel true`.
[[nodiscard]] RegressionDataset parse_ts_regression(std::istream &in);

void write_ts_text(std::ostream &out, const TimeSeriesDataset &dataset);
[[nodiscard]] std::string to_ts_text(const TimeSeriesDataset &dataset);

/**
 * CSV layout: header `c<dim>_<t>,...,label` with columns ordered by
 * dimension then time step, one row per instance. A header whose value
 * columns do not follow that naming is read as univariate.
 */
[[nodiscard]] TimeSeriesDataset parse_csv_text(std::istream &in, const std::string &name = "csv");
void write_csv_text(std::ostream &out, const TimeSeriesDataset &dataset);

/// Canonical class ordering for a set of label tokens. Duplicates removed.
[[nodiscard]] std::vector<std::string> canonical_class_order(std::vector<std::string> tokens);

/// Dispatches on extension: `.csv` is CSV, anything else `.ts`. Throws IoError when unreadable.
[[nodiscard]] TimeSeriesDataset read_dataset(const std::filesystem::path &path);
void write_dataset(const std::filesystem::path &path, const TimeSeriesDataset &dataset);

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_double(double value);

} // namespace otde
