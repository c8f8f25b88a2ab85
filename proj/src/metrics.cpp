#include "otde/metrics.hpp"

#include "otde/error.hpp"

#include <cstdlib>

namespace otde {

ConfusionMatrix::ConfusionMatrix(int num_classes) : k_(num_classes) {
    if (num_classes < 1) {
        throw Error(ErrorKind::InvalidArgument, "confusion matrix needs at least one class");
    }
    counts_.assign(static_cast<std::size_t>(k_ * k_), 0);
}

void ConfusionMatrix::add(int truth, int predicted) {
    if (truth < 0 || truth >= k_ || predicted < 0 || predicted >= k_) {
        throw Error(ErrorKind::LabelOutOfRange, "label outside 0.." + std::to_string(k_ - 1));
    }
    ++counts_[static_cast<std::size_t>(truth * k_ + predicted)];
    ++total_;
}

std::int64_t ConfusionMatrix::row_sum(int i) const {
    std::int64_t s = 0;
    for (int j = 0; j < k_; ++j) {
        s += at(i, j);
    }
    return s;
}

std::int64_t ConfusionMatrix::col_sum(int j) const {
    std::int64_t s = 0;
    for (int i = 0; i < k_; ++i) {
        s += at(i, j);
    }
    return s;
}

namespace {

void check_lengths(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "label vectors differ in length: " + std::to_string(a.size()) +
                                                   " vs " + std::to_string(b.size()));
    }
    if (a.empty()) {
        throw Error(ErrorKind::LengthMismatch, "label vectors are empty");
    }
}

} // namespace

ConfusionMatrix confusion(std::span<const int> y_true, std::span<const int> y_pred, int num_classes) {
    check_lengths(y_true, y_pred);
    ConfusionMatrix cm(num_classes);
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        cm.add(y_true[i], y_pred[i]);
    }
    return cm;
}

double ccr(std::span<const int> y_true, std::span<const int> y_pred) {
    check_lengths(y_true, y_pred);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        hits += y_true[i] == y_pred[i];
    }
    return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

double mae(std::span<const int> y_true, std::span<const int> y_pred) {
    check_lengths(y_true, y_pred);
    long long sum = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        sum += std::abs(y_pred[i] - y_true[i]);
    }
    return static_cast<double>(sum) / static_cast<double>(y_true.size());
}

double one_off(std::span<const int> y_true, std::span<const int> y_pred) {
    check_lengths(y_true, y_pred);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        hits += std::abs(y_pred[i] - y_true[i]) <= 1;
    }
    return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

double qwk(std::span<const int> y_true, std::span<const int> y_pred, int num_classes) {
    return qwk(confusion(y_true, y_pred, num_classes));
}

double qwk(const ConfusionMatrix &cm, double weight_scale) {
    const int k = cm.num_classes();
    const double n = static_cast<double>(cm.total());
    const double norm = k > 1 ? weight_scale / static_cast<double>((k - 1) * (k - 1)) : 0.0;
    std::vector<double> rows(static_cast<std::size_t>(k)), cols(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        rows[static_cast<std::size_t>(i)] = static_cast<double>(cm.row_sum(i));
        cols[static_cast<std::size_t>(i)] = static_cast<double>(cm.col_sum(i));
    }
    double observed = 0.0;
    double expected = 0.0;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const double w = norm * static_cast<double>((i - j) * (i - j));
            observed += w * static_cast<double>(cm.at(i, j));
            expected += w * rows[static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(j)] / n;
        }
    }
    if (expected == 0.0) {
        return observed == 0.0 ? 1.0 : 0.0;
    }
    return 1.0 - observed / expected;
}

double ccr(const ConfusionMatrix &cm) {
    std::int64_t hits = 0;
    for (int i = 0; i < cm.num_classes(); ++i) {
        hits += cm.at(i, i);
    }
    return static_cast<double>(hits) / static_cast<double>(cm.total());
}

double mae(const ConfusionMatrix &cm) {
    std::int64_t sum = 0;
    for (int i = 0; i < cm.num_classes(); ++i) {
        for (int j = 0; j < cm.num_classes(); ++j) {
            sum += cm.at(i, j) * std::abs(i - j);
        }
    }
    return static_cast<double>(sum) / static_cast<double>(cm.total());
}

double one_off(const ConfusionMatrix &cm) {
    std::int64_t hits = 0;
    for (int i = 0; i < cm.num_classes(); ++i) {
        for (int j = 0; j < cm.num_classes(); ++j) {
            if (std::abs(i - j) <= 1) {
                hits += cm.at(i, j);
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(cm.total());
}

} // namespace otde
