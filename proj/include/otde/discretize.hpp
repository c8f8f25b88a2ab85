#pragma once

#include "otde/dataset.hpp"

#include <span>
#include <vector>

namespace otde {

/// Cut-points of the returns-based financial problems: (-inf, -0.05, -0.02, 0.02, 0.05, inf).
inline const std::vector<double> kFinancialCutPoints{-0.05, -0.02, 0.02, 0.05};
inline constexpr int kDefaultTargetBins = 5;

/** Equal-width bins over a fixed [min, max] range. */
struct EqualWidthBins {
    double min = 0.0;
    double max = 1.0;
    int bins = 1;

    /// floor(bins * (v - min) / (max - min)), clamped to [0, bins-1].
    [[nodiscard]] int label(double v) const;
    [[nodiscard]] std::vector<int> apply(std::span<const double> values) const;
};

/// Bins spanning the range of `values`. Throws DegenerateRange when max == min.
[[nodiscard]] EqualWidthBins fit_equal_width(std::span<const double> values, int bins);

[[nodiscard]] std::vector<int> discretize_equal_width(std::span<const double> values, int bins);

/// Label = number of cut-points strictly below v. Cut-points must ascend strictly.
[[nodiscard]] std::vector<int> discretize_thresholds(std::span<const double> values,
                                                     std::span<const double> thresholds);

struct ReturnWindows {
    std::vector<Series> series;
    std::vector<double> targets;
};

/**
 * Simple returns r_t = p_t / p_{t-1} - 1; instance t (t > lookback) holds
 * (r_{t-lookback}, ..., r_{t-1}) with target r_t.
 */
[[nodiscard]] ReturnWindows build_return_windows(std::span<const double> prices, std::size_t lookback);

} // namespace otde
