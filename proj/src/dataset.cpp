#include "otde/dataset.hpp"

#include "otde/error.hpp"
#include "otde/random.hpp"

#include <algorithm>

namespace otde {

Series::Series(std::size_t dims, std::size_t length, std::vector<double> values)
    : dims_(dims), length_(length), values_(std::move(values)) {
    if (dims_ == 0 || length_ == 0) {
        throw Error(ErrorKind::MalformedDataset, "series must have at least one dimension and one sample");
    }
    if (values_.size() != dims_ * length_) {
        throw Error(ErrorKind::MalformedDataset, "series holds " + std::to_string(values_.size()) +
                                                     " values, expected " + std::to_string(dims_ * length_));
    }
}

Series::Series(std::vector<double> values) : dims_(1), length_(values.size()), values_(std::move(values)) {
    if (length_ == 0) {
        throw Error(ErrorKind::MalformedDataset, "series must have at least one dimension and one sample");
    }
}

namespace {

std::vector<std::string> default_class_names(int num_classes) {
    std::vector<std::string> names;
    for (int k = 0; k < num_classes; ++k) {
        names.push_back(std::to_string(k));
    }
    return names;
}

} // namespace

TimeSeriesDataset::TimeSeriesDataset(std::string name, std::vector<Series> series, std::vector<int> labels,
                                     std::vector<std::string> class_names)
    : name_(std::move(name)), series_(std::move(series)), labels_(std::move(labels)),
      class_names_(std::move(class_names)) {
    validate();
}

TimeSeriesDataset::TimeSeriesDataset(std::string name, std::vector<Series> series, std::vector<int> labels,
                                     int num_classes)
    : TimeSeriesDataset(std::move(name), std::move(series), std::move(labels),
                        default_class_names(num_classes)) {}

void TimeSeriesDataset::validate() const {
    if (series_.empty()) {
        throw Error(ErrorKind::MalformedDataset, "dataset has no instances");
    }
    if (series_.size() != labels_.size()) {
        throw Error(ErrorKind::MalformedDataset, "series and label counts differ");
    }
    if (class_names_.size() < 2) {
        throw Error(ErrorKind::MalformedDataset, "at least two classes are required");
    }
    const std::size_t d = series_.front().dims();
    const std::size_t l = series_.front().length();
    for (std::size_t i = 0; i < series_.size(); ++i) {
        if (series_[i].dims() != d || series_[i].length() != l) {
            throw Error(ErrorKind::MalformedDataset, "instance " + std::to_string(i) + " has shape " +
                                                         std::to_string(series_[i].dims()) + "x" +
                                                         std::to_string(series_[i].length()) + ", expected " +
                                                         std::to_string(d) + "x" + std::to_string(l));
        }
        if (labels_[i] < 0 || labels_[i] >= num_classes()) {
            throw Error(ErrorKind::LabelOutOfRange, "label " + std::to_string(labels_[i]) + " of instance " +
                                                        std::to_string(i) + " outside 0.." +
                                                        std::to_string(num_classes() - 1));
        }
    }
}

std::vector<std::size_t> TimeSeriesDataset::class_counts() const {
    std::vector<std::size_t> counts(class_names_.size(), 0);
    for (int y : labels_) {
        ++counts[static_cast<std::size_t>(y)];
    }
    return counts;
}

TimeSeriesDataset TimeSeriesDataset::subset(std::span<const std::size_t> indices) const {
    std::vector<Series> series;
    std::vector<int> labels;
    series.reserve(indices.size());
    labels.reserve(indices.size());
    for (std::size_t i : indices) {
        series.push_back(series_.at(i));
        labels.push_back(labels_.at(i));
    }
    return {name_, std::move(series), std::move(labels), class_names_};
}

double train_fraction(const TimeSeriesDataset &train, const TimeSeriesDataset &test) {
    return static_cast<double>(train.size()) / static_cast<double>(train.size() + test.size());
}

std::pair<TimeSeriesDataset, TimeSeriesDataset>
stratified_resample(const TimeSeriesDataset &train, const TimeSeriesDataset &test, const ResampleSpec &spec) {
    if (train.dims() != test.dims() || train.length() != test.length() ||
        train.class_names() != test.class_names()) {
        throw Error(ErrorKind::ShapeMismatch, "train and test must share dimensions, length and classes");
    }
    if (spec.seed == 0) {
        return {train, test};
    }

    const std::size_t n_train = train.size();
    const std::size_t n_pool = n_train + test.size();
    auto pooled_label = [&](std::size_t i) { return i < n_train ? train.labels()[i] : test.labels()[i - n_train]; };
    auto pooled_series = [&](std::size_t i) -> const Series & {
        return i < n_train ? train.series()[i] : test.series()[i - n_train];
    };

    const auto train_counts = train.class_counts();
    std::vector<std::vector<std::size_t>> by_class(train_counts.size());
    for (std::size_t i = 0; i < n_pool; ++i) {
        by_class[static_cast<std::size_t>(pooled_label(i))].push_back(i);
    }

    Rng rng(spec.seed);
    std::vector<bool> in_train(n_pool, false);
    for (std::size_t k = 0; k < by_class.size(); ++k) {
        auto &members = by_class[k];
        rng.shuffle(members);
        for (std::size_t j = 0; j < train_counts[k]; ++j) {
            in_train[members[j]] = true;
        }
    }

    std::vector<Series> tr_series, te_series;
    std::vector<int> tr_labels, te_labels;
    for (std::size_t i = 0; i < n_pool; ++i) {
        if (in_train[i]) {
            tr_series.push_back(pooled_series(i));
            tr_labels.push_back(pooled_label(i));
        } else {
            te_series.push_back(pooled_series(i));
            te_labels.push_back(pooled_label(i));
        }
    }
    return {TimeSeriesDataset(train.name(), std::move(tr_series), std::move(tr_labels), train.class_names()),
            TimeSeriesDataset(test.name(), std::move(te_series), std::move(te_labels), test.class_names())};
}

} // namespace otde
