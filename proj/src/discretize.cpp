#include "otde/discretize.hpp"

#include "otde/error.hpp"

#include <algorithm>
#include <cmath>

namespace otde {

int EqualWidthBins::label(double v) const {
    const double scaled = std::floor(static_cast<double>(bins) * (v - min) / (max - min));
    if (!(scaled > 0.0)) {
        return 0;
    }
    return scaled >= static_cast<double>(bins - 1) ? bins - 1 : static_cast<int>(scaled);
}

std::vector<int> EqualWidthBins::apply(std::span<const double> values) const {
    std::vector<int> labels;
    labels.reserve(values.size());
    for (double v : values) {
        labels.push_back(label(v));
    }
    return labels;
}

EqualWidthBins fit_equal_width(std::span<const double> values, int bins) {
    if (bins < 1) {
        throw Error(ErrorKind::InvalidArgument, "bins must be positive");
    }
    if (values.empty()) {
        throw Error(ErrorKind::DegenerateRange, "no values to bin");
    }
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (!(*hi > *lo)) {
        throw Error(ErrorKind::DegenerateRange, "all values are equal");
    }
    return {*lo, *hi, bins};
}

std::vector<int> discretize_equal_width(std::span<const double> values, int bins) {
    return fit_equal_width(values, bins).apply(values);
}

std::vector<int> discretize_thresholds(std::span<const double> values, std::span<const double> thresholds) {
    for (std::size_t i = 1; i < thresholds.size(); ++i) {
        if (!(thresholds[i] > thresholds[i - 1])) {
            throw Error(ErrorKind::InvalidThresholds, "cut-points must be strictly ascending");
        }
    }
    std::vector<int> labels;
    labels.reserve(values.size());
    for (double v : values) {
        labels.push_back(static_cast<int>(std::lower_bound(thresholds.begin(), thresholds.end(), v) -
                                          thresholds.begin()));
    }
    return labels;
}

ReturnWindows build_return_windows(std::span<const double> prices, std::size_t lookback) {
    if (lookback == 0) {
        throw Error(ErrorKind::InvalidArgument, "lookback must be positive");
    }
    if (prices.size() < lookback + 2) {
        throw Error(ErrorKind::InsufficientHistory, "need at least " + std::to_string(lookback + 2) +
                                                        " prices, got " + std::to_string(prices.size()));
    }
    for (double p : prices) {
        if (!(p > 0.0)) {
            throw Error(ErrorKind::InvalidPrice, "prices must be positive");
        }
    }
    // returns[t] = r_t, returns[0] unused
    std::vector<double> returns(prices.size(), 0.0);
    for (std::size_t t = 1; t < prices.size(); ++t) {
        returns[t] = prices[t] / prices[t - 1] - 1.0;
    }
    ReturnWindows out;
    for (std::size_t t = lookback + 1; t < prices.size(); ++t) {
        out.series.emplace_back(std::vector<double>(returns.begin() + static_cast<std::ptrdiff_t>(t - lookback),
                                                    returns.begin() + static_cast<std::ptrdiff_t>(t)));
        out.targets.push_back(returns[t]);
    }
    return out;
}

} // namespace otde
