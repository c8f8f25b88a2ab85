#pragma once

#include "otde/dataset.hpp"
#include "otde/sfa.hpp"

#include <cstdint>
#include <vector>

namespace otde {

enum class HistogramDistance {
    Intersection,      ///< nearest = largest sum of min counts
    SquaredDifference, ///< nearest = smallest sum of squared count differences
};

/// Histogram intersection: sum over words of min(a[w], b[w]).
[[nodiscard]] double similarity(const WordHistogram &a, const WordHistogram &b);

/// Symmetric sum of squared count differences over the union of words.
[[nodiscard]] double squared_difference(const WordHistogram &a, const WordHistogram &b);

/// Index of the nearest histogram in `pool`, skipping `exclude`; ties go to the lowest index.
[[nodiscard]] std::size_t nearest_neighbour(const WordHistogram &query, const std::vector<WordHistogram> &pool,
                                            HistogramDistance distance, std::size_t exclude = SIZE_MAX);

/** One dictionary classifier: fitted transform plus stored training histograms. */
class IndividualOTDE {
public:
    IndividualOTDE(TransformParams params, BinningModel binning, std::vector<WordHistogram> train_histograms,
                   std::vector<int> train_labels, int num_classes, std::size_t dims, std::size_t length,
                   HistogramDistance distance = HistogramDistance::Intersection);

    [[nodiscard]] static IndividualOTDE fit(const TimeSeriesDataset &train, const TransformParams &params,
                                            HistogramDistance distance = HistogramDistance::Intersection);

    [[nodiscard]] int predict_one(const Series &x) const;
    [[nodiscard]] int predict_histogram(const WordHistogram &h) const;

    [[nodiscard]] const TransformParams &params() const noexcept { return params_; }
    [[nodiscard]] const BinningModel &binning() const noexcept { return binning_; }
    [[nodiscard]] const std::vector<WordHistogram> &train_histograms() const noexcept { return train_histograms_; }
    [[nodiscard]] const std::vector<int> &train_labels() const noexcept { return train_labels_; }
    [[nodiscard]] int num_classes() const noexcept { return num_classes_; }
    [[nodiscard]] std::size_t dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t length() const noexcept { return length_; }
    [[nodiscard]] HistogramDistance distance() const noexcept { return distance_; }

    friend bool operator==(const IndividualOTDE &, const IndividualOTDE &) = default;

private:
    TransformParams params_;
    BinningModel binning_;
    std::vector<WordHistogram> train_histograms_;
    std::vector<int> train_labels_;
    int num_classes_;
    std::size_t dims_;
    std::size_t length_;
    HistogramDistance distance_;
};

inline constexpr double kDefaultSubsampleFraction = 0.7;

/// Seeded stratified subsample: round(fraction * n_k) instances (at least one) of each present class k,
/// returned in ascending index order.
[[nodiscard]] std::vector<std::size_t> stratified_subsample(const TimeSeriesDataset &data, double fraction,
                                                            std::uint64_t seed);

/**
 * Leave-one-out MAE of the 1-NN classifier: fits on a stratified subsample,
 * predicts each retained instance from the others. Throws NotEnoughData when
 * fewer than two instances are available.
 */
[[nodiscard]] double loo_mae(const TimeSeriesDataset &train, const TransformParams &params,
                             double subsample_fraction = kDefaultSubsampleFraction, std::uint64_t seed = 0,
                             HistogramDistance distance = HistogramDistance::Intersection);

} // namespace otde
