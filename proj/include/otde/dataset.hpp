#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace otde {

/** One d x l real-valued series, stored channel-major. */
class Series {
public:
    Series() = default;
    Series(std::size_t dims, std::size_t length, std::vector<double> values);

    /// Univariate convenience constructor.
    explicit Series(std::vector<double> values);

    [[nodiscard]] std::size_t dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] std::span<const double> channel(std::size_t dim) const {
        return {values_.data() + dim * length_, length_};
    }
    [[nodiscard]] const std::vector<double> &values() const noexcept { return values_; }

    friend bool operator==(const Series &, const Series &) = default;

private:
    std::size_t dims_ = 0;
    std::size_t length_ = 0;
    std::vector<double> values_;
};

/**
 * N equal-shape series with ordinal labels 0..K-1.
 *
 * class_names holds the original label token of each class index, in
 * ascending ordinal order. Immutable after construction.
 */
class TimeSeriesDataset {
public:
    TimeSeriesDataset(std::string name, std::vector<Series> series, std::vector<int> labels,
                      std::vector<std::string> class_names);

    /// Class names default to "0".."K-1".
    TimeSeriesDataset(std::string name, std::vector<Series> series, std::vector<int> labels,
                      int num_classes);

    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] std::size_t size() const noexcept { return series_.size(); }
    [[nodiscard]] std::size_t dims() const noexcept { return series_.front().dims(); }
    [[nodiscard]] std::size_t length() const noexcept { return series_.front().length(); }
    [[nodiscard]] int num_classes() const noexcept { return static_cast<int>(class_names_.size()); }
    [[nodiscard]] const std::vector<Series> &series() const noexcept { return series_; }
    [[nodiscard]] const std::vector<int> &labels() const noexcept { return labels_; }
    [[nodiscard]] const std::vector<std::string> &class_names() const noexcept { return class_names_; }

    /// Per-class instance counts (size K).
    [[nodiscard]] std::vector<std::size_t> class_counts() const;

    /// New dataset holding the given instances, in the given order.
    [[nodiscard]] TimeSeriesDataset subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const TimeSeriesDataset &, const TimeSeriesDataset &) = default;

private:
    void validate() const;

    std::string name_;
    std::vector<Series> series_;
    std::vector<int> labels_;
    std::vector<std::string> class_names_;
};

/** Seed 0 is the original split; any other seed draws a new stratified split. */
struct ResampleSpec {
    std::uint64_t seed = 0;
};

/// Fraction of the pooled instances that the original split assigns to train.
[[nodiscard]] double train_fraction(const TimeSeriesDataset &train, const TimeSeriesDataset &test);

/**
 * Pools train and test and re-splits them keeping |train|, |test| and the
 * per-class train counts of the original split. Deterministic in the seed.
 */
[[nodiscard]] std::pair<TimeSeriesDataset, TimeSeriesDataset>
stratified_resample(const TimeSeriesDataset &train, const TimeSeriesDataset &test,
                    const ResampleSpec &spec);

} // namespace otde
