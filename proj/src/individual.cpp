#include "otde/individual.hpp"

#include "otde/error.hpp"
#include "otde/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace otde {

double similarity(const WordHistogram &a, const WordHistogram &b) {
    const auto &ea = a.entries();
    const auto &eb = b.entries();
    std::uint64_t sum = 0;
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first < eb[j].first) {
            ++i;
        } else if (eb[j].first < ea[i].first) {
            ++j;
        } else {
            sum += std::min(ea[i].second, eb[j].second);
            ++i;
            ++j;
        }
    }
    return static_cast<double>(sum);
}

double squared_difference(const WordHistogram &a, const WordHistogram &b) {
    const auto &ea = a.entries();
    const auto &eb = b.entries();
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    auto sq = [](double x) { return x * x; };
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            sum += sq(ea[i++].second);
        } else if (i == ea.size() || eb[j].first < ea[i].first) {
            sum += sq(eb[j++].second);
        } else {
            sum += sq(static_cast<double>(ea[i].second) - static_cast<double>(eb[j].second));
            ++i;
            ++j;
        }
    }
    return sum;
}

std::size_t nearest_neighbour(const WordHistogram &query, const std::vector<WordHistogram> &pool,
                              HistogramDistance distance, std::size_t exclude) {
    std::size_t best = SIZE_MAX;
    double best_score = 0.0;
    for (std::size_t j = 0; j < pool.size(); ++j) {
        if (j == exclude) {
            continue;
        }
        // larger score is nearer in both modes
        const double score = distance == HistogramDistance::Intersection ? similarity(query, pool[j])
                                                                         : -squared_difference(query, pool[j]);
        if (best == SIZE_MAX || score > best_score) {
            best = j;
            best_score = score;
        }
    }
    if (best == SIZE_MAX) {
        throw Error(ErrorKind::NotEnoughData, "no candidate neighbours");
    }
    return best;
}

IndividualOTDE::IndividualOTDE(TransformParams params, BinningModel binning,
                               std::vector<WordHistogram> train_histograms, std::vector<int> train_labels,
                               int num_classes, std::size_t dims, std::size_t length, HistogramDistance distance)
    : params_(params), binning_(std::move(binning)), train_histograms_(std::move(train_histograms)),
      train_labels_(std::move(train_labels)), num_classes_(num_classes), dims_(dims), length_(length),
      distance_(distance) {
    if (train_histograms_.empty() || train_histograms_.size() != train_labels_.size()) {
        throw Error(ErrorKind::InvalidArgument, "model needs one label per stored histogram");
    }
    params_.validate(length_);
}

IndividualOTDE IndividualOTDE::fit(const TimeSeriesDataset &train, const TransformParams &params,
                                   HistogramDistance distance) {
    auto transform = fit_transform_train(train.series(), train.labels(), params);
    return {params,
            std::move(transform.binning),
            std::move(transform.histograms),
            train.labels(),
            train.num_classes(),
            train.dims(),
            train.length(),
            distance};
}

int IndividualOTDE::predict_histogram(const WordHistogram &h) const {
    return train_labels_[nearest_neighbour(h, train_histograms_, distance_)];
}

int IndividualOTDE::predict_one(const Series &x) const {
    if (x.dims() != dims_ || x.length() != length_) {
        throw Error(ErrorKind::ShapeMismatch, "series shape differs from the training data");
    }
    return predict_histogram(transform_one(x, params_, binning_));
}

std::vector<std::size_t> stratified_subsample(const TimeSeriesDataset &data, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw Error(ErrorKind::InvalidArgument, "subsample fraction must lie in (0, 1]");
    }
    std::vector<std::size_t> keep;
    if (fraction == 1.0) {
        keep.resize(data.size());
        std::iota(keep.begin(), keep.end(), std::size_t{0});
        return keep;
    }
    std::vector<std::vector<std::size_t>> by_class(static_cast<std::size_t>(data.num_classes()));
    for (std::size_t i = 0; i < data.size(); ++i) {
        by_class[static_cast<std::size_t>(data.labels()[i])].push_back(i);
    }
    Rng rng(seed);
    for (auto &members : by_class) {
        if (members.empty()) {
            continue;
        }
        const auto take = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(fraction * static_cast<double>(members.size()))));
        for (std::size_t j : rng.sample_indices(members.size(), take)) {
            keep.push_back(members[j]);
        }
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

double loo_mae(const TimeSeriesDataset &train, const TransformParams &params, double subsample_fraction,
               std::uint64_t seed, HistogramDistance distance) {
    if (train.size() < 2) {
        throw Error(ErrorKind::NotEnoughData, "leave-one-out needs at least two instances");
    }
    auto keep = stratified_subsample(train, subsample_fraction, seed);
    if (keep.size() < 2) {
        keep.resize(train.size());
        std::iota(keep.begin(), keep.end(), std::size_t{0});
    }
    const auto sample = keep.size() == train.size() ? train : train.subset(keep);
    const auto transform = fit_transform_train(sample.series(), sample.labels(), params);
    const auto &labels = sample.labels();
    double total = 0.0;
    for (std::size_t i = 0; i < transform.histograms.size(); ++i) {
        const auto j = nearest_neighbour(transform.histograms[i], transform.histograms, distance, i);
        total += std::abs(labels[j] - labels[i]);
    }
    return total / static_cast<double>(transform.histograms.size());
}

} // namespace otde
