#include "otde/sfa.hpp"

#include "otde/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace otde {

void TransformParams::validate(std::size_t series_length) const {
    if (window_length < 1 || coefficient_count < 1) {
        throw Error(ErrorKind::InvalidArgument, "window_length and coefficient_count must be positive");
    }
    if (alphabet_size < 2 || alphabet_size > 256) {
        throw Error(ErrorKind::InvalidArgument, "alphabet_size must lie in [2, 256]");
    }
    if (static_cast<std::size_t>(window_length) > series_length) {
        throw Error(ErrorKind::WindowTooLong, "window_length " + std::to_string(window_length) +
                                                  " exceeds series length " + std::to_string(series_length));
    }
    if (2 * coefficient_count > window_length) {
        throw Error(ErrorKind::TooManyCoefficients, "2 * coefficient_count exceeds window_length");
    }
}

std::vector<std::vector<double>> sliding_windows(std::span<const double> x, std::size_t w) {
    if (w == 0) {
        throw Error(ErrorKind::InvalidArgument, "window length must be positive");
    }
    if (w > x.size()) {
        throw Error(ErrorKind::WindowTooLong, "window longer than series");
    }
    std::vector<std::vector<double>> out;
    out.reserve(x.size() - w + 1);
    for (std::size_t i = 0; i + w <= x.size(); ++i) {
        out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i),
                         x.begin() + static_cast<std::ptrdiff_t>(i + w));
    }
    return out;
}

namespace {

void z_normalize_into(std::span<const double> window, std::vector<double> &out) {
    out.resize(window.size());
    if (window.empty()) {
        return;
    }
    const double n = static_cast<double>(window.size());
    const double mean = std::accumulate(window.begin(), window.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : window) {
        ss += (v - mean) * (v - mean);
    }
    const double sd = std::sqrt(ss / n);
    if (sd <= kFlatWindowStd) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    for (std::size_t k = 0; k < window.size(); ++k) {
        out[k] = (window[k] - mean) / sd;
    }
}

} // namespace

std::vector<double> z_normalize(std::span<const double> window) {
    std::vector<double> out;
    z_normalize_into(window, out);
    return out;
}

FourierProjector::FourierProjector(std::size_t window_length, int coefficient_count, bool normalize)
    : w_(window_length), c_(coefficient_count), normalize_(normalize) {
    if (c_ < 1) {
        throw Error(ErrorKind::InvalidArgument, "coefficient count must be positive");
    }
    if (2 * static_cast<std::size_t>(c_) > w_) {
        throw Error(ErrorKind::TooManyCoefficients, "2c = " + std::to_string(2 * c_) + " exceeds window length " +
                                                        std::to_string(w_));
    }
    const int first = normalize_ ? 1 : 0;
    cos_.resize(static_cast<std::size_t>(c_) * w_);
    sin_.resize(static_cast<std::size_t>(c_) * w_);
    for (int j = 0; j < c_; ++j) {
        const std::size_t freq = static_cast<std::size_t>(first + j);
        for (std::size_t k = 0; k < w_; ++k) {
            // reduce jk mod w before scaling to keep the phase exact
            const double phase = 2.0 * std::numbers::pi * static_cast<double>((freq * k) % w_) /
                                 static_cast<double>(w_);
            cos_[static_cast<std::size_t>(j) * w_ + k] = std::cos(phase);
            sin_[static_cast<std::size_t>(j) * w_ + k] = -std::sin(phase);
        }
    }
}

void FourierProjector::project(std::span<const double> window, std::span<double> out,
                               std::vector<double> &scratch) const {
    if (window.size() != w_ || out.size() != output_size()) {
        throw Error(ErrorKind::ShapeMismatch, "window or output size does not match the projector");
    }
    std::span<const double> x = window;
    if (normalize_) {
        z_normalize_into(window, scratch);
        x = scratch;
    }
    for (std::size_t j = 0; j < static_cast<std::size_t>(c_); ++j) {
        const double *cr = cos_.data() + j * w_;
        const double *si = sin_.data() + j * w_;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < w_; ++k) {
            re += x[k] * cr[k];
            im += x[k] * si[k];
        }
        out[2 * j] = re;
        out[2 * j + 1] = im;
    }
}

std::vector<double> FourierProjector::project(std::span<const double> window) const {
    std::vector<double> out(output_size());
    std::vector<double> scratch;
    project(window, out, scratch);
    return out;
}

std::vector<double> dft_coefficients(std::span<const double> window, int c, bool normalize) {
    return FourierProjector(window.size(), c, normalize).project(window);
}

std::vector<double> fit_igb(std::span<const double> values, std::span<const double> labels, int alphabet_size) {
    if (values.empty()) {
        throw Error(ErrorKind::EmptyColumn, "cannot bin an empty column");
    }
    if (values.size() != labels.size()) {
        throw Error(ErrorKind::LengthMismatch, "values and labels differ in length");
    }
    if (alphabet_size < 2) {
        throw Error(ErrorKind::InvalidArgument, "alphabet size must be at least 2");
    }

    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> v(n);
    std::vector<double> prefix(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = values[order[i]];
        prefix[i + 1] = prefix[i] + labels[order[i]];
    }

    struct Candidate {
        std::size_t begin = 0, end = 0, split = 0; // split: first index of the right child
        double improvement = 0.0;
        double threshold = 0.0;
    };

    auto best_split = [&](std::size_t begin, std::size_t end) {
        Candidate best{begin, end, 0, 0.0, 0.0};
        const double total = prefix[end] - prefix[begin];
        const double count = static_cast<double>(end - begin);
        for (std::size_t p = begin + 1; p < end; ++p) {
            if (!(v[p - 1] < v[p])) {
                continue;
            }
            const double n_l = static_cast<double>(p - begin);
            const double n_r = count - n_l;
            const double s_l = prefix[p] - prefix[begin];
            const double s_r = total - s_l;
            const double diff = s_l * n_r - s_r * n_l;
            const double improvement = diff * diff / (n_l * n_r * count);
            // strict > keeps the smallest threshold among equal improvements
            if (improvement > best.improvement) {
                double mid = v[p - 1] + (v[p] - v[p - 1]) / 2.0;
                if (!(mid > v[p - 1])) {
                    mid = v[p];
                }
                best = {begin, end, p, improvement, mid};
            }
        }
        return best;
    };

    std::vector<Candidate> frontier{best_split(0, n)};
    std::vector<double> thresholds;
    std::size_t leaves = 1;
    while (leaves < static_cast<std::size_t>(alphabet_size)) {
        auto pick = frontier.end();
        for (auto it = frontier.begin(); it != frontier.end(); ++it) {
            if (it->improvement <= 0.0) {
                continue;
            }
            if (pick == frontier.end() || it->improvement > pick->improvement ||
                (it->improvement == pick->improvement && it->threshold < pick->threshold)) {
                pick = it;
            }
        }
        if (pick == frontier.end()) {
            break;
        }
        const Candidate chosen = *pick;
        frontier.erase(pick);
        thresholds.push_back(chosen.threshold);
        frontier.push_back(best_split(chosen.begin, chosen.split));
        frontier.push_back(best_split(chosen.split, chosen.end));
        ++leaves;
    }
    std::sort(thresholds.begin(), thresholds.end());
    return thresholds;
}

int BinningModel::symbol(std::size_t column, double v) const {
    const auto &row = thresholds[column];
    return static_cast<int>(std::upper_bound(row.begin(), row.end(), v) - row.begin());
}

Word symbolize(std::span<const double> coeffs, const BinningModel &model) {
    if (coeffs.size() != model.thresholds.size()) {
        throw Error(ErrorKind::ShapeMismatch, "coefficient count does not match the binning model");
    }
    Word word;
    word.symbols.resize(coeffs.size());
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        word.symbols[m] = static_cast<std::uint8_t>(model.symbol(m, coeffs[m]));
    }
    return word;
}

namespace {

/// True when dims * T^word_length codes fit in 64 bits.
bool word_space_fits(int alphabet_size, int word_length, std::size_t dims) {
    long double capacity = static_cast<long double>(dims);
    for (int i = 0; i < word_length; ++i) {
        capacity *= static_cast<long double>(alphabet_size);
    }
    return capacity <= static_cast<long double>(std::numeric_limits<std::uint64_t>::max());
}

} // namespace

std::uint64_t encode_word(const Word &word, int alphabet_size, std::size_t dim) {
    std::uint64_t code = dim;
    const auto base = static_cast<std::uint64_t>(alphabet_size);
    for (std::uint8_t s : word.symbols) {
        code = code * base + s;
    }
    return code;
}

std::pair<std::size_t, Word> decode_word(std::uint64_t code, int alphabet_size, int word_length) {
    const auto base = static_cast<std::uint64_t>(alphabet_size);
    Word word;
    word.symbols.resize(static_cast<std::size_t>(word_length));
    for (int m = word_length - 1; m >= 0; --m) {
        word.symbols[static_cast<std::size_t>(m)] = static_cast<std::uint8_t>(code % base);
        code /= base;
    }
    return {static_cast<std::size_t>(code), std::move(word)};
}

WordHistogram WordHistogram::from_words(std::vector<std::uint64_t> words) {
    std::sort(words.begin(), words.end());
    WordHistogram h;
    for (std::size_t i = 0; i < words.size();) {
        std::size_t j = i;
        while (j < words.size() && words[j] == words[i]) {
            ++j;
        }
        h.entries_.emplace_back(words[i], static_cast<std::uint32_t>(j - i));
        i = j;
    }
    h.total_ = words.size();
    return h;
}

WordHistogram WordHistogram::from_entries(std::vector<Entry> entries) {
    WordHistogram h;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second == 0 || (i > 0 && entries[i].first <= entries[i - 1].first)) {
            throw Error(ErrorKind::InvalidArgument, "histogram entries must be sorted, unique and positive");
        }
        h.total_ += entries[i].second;
    }
    h.entries_ = std::move(entries);
    return h;
}

std::uint32_t WordHistogram::count(std::uint64_t word) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), word,
                                     [](const Entry &e, std::uint64_t w) { return e.first < w; });
    return it != entries_.end() && it->first == word ? it->second : 0;
}

namespace {

/// Words of one series from precomputed window coefficients.
/// coeff_row(dim, i) yields the 2c coefficients of window i of that dimension.
template <typename CoeffRow>
WordHistogram histogram_from_coefficients(std::size_t dims, std::size_t n_windows, const TransformParams &params,
                                          const BinningModel &model, CoeffRow coeff_row) {
    std::vector<std::uint64_t> words;
    words.reserve(dims * n_windows);
    for (std::size_t d = 0; d < dims; ++d) {
        std::uint64_t previous = 0;
        for (std::size_t i = 0; i < n_windows; ++i) {
            const std::uint64_t code = encode_word(symbolize(coeff_row(d, i), model), params.alphabet_size, d);
            if (params.numerosity_reduction && i > 0 && code == previous) {
                continue;
            }
            words.push_back(code);
            previous = code;
        }
    }
    return WordHistogram::from_words(std::move(words));
}

void check_shapes(std::span<const Series> series, const TransformParams &params) {
    if (series.empty()) {
        throw Error(ErrorKind::NotEnoughData, "no training series");
    }
    const std::size_t d = series.front().dims();
    const std::size_t l = series.front().length();
    for (const auto &s : series) {
        if (s.dims() != d || s.length() != l) {
            throw Error(ErrorKind::ShapeMismatch, "training series differ in shape");
        }
    }
    params.validate(l);
    if (!word_space_fits(params.alphabet_size, params.word_length(), d)) {
        throw Error(ErrorKind::InvalidArgument, "word encoding exceeds 64 bits for these parameters");
    }
}

} // namespace

TrainTransform fit_transform_train(std::span<const Series> series, std::span<const int> labels,
                                   const TransformParams &params) {
    check_shapes(series, params);
    if (labels.size() != series.size()) {
        throw Error(ErrorKind::LengthMismatch, "series and labels differ in count");
    }
    const std::size_t dims = series.front().dims();
    const std::size_t w = static_cast<std::size_t>(params.window_length);
    const std::size_t n_windows = series.front().length() - w + 1;
    const std::size_t per_series = dims * n_windows;
    const std::size_t cols = static_cast<std::size_t>(params.word_length());
    const std::size_t rows = series.size() * per_series;

    // coefficient matrix, row-major: one row per (series, dim, window)
    FourierProjector projector(w, params.coefficient_count, params.normalize);
    std::vector<double> matrix(rows * cols);
    std::vector<double> scratch;
    for (std::size_t s = 0; s < series.size(); ++s) {
        for (std::size_t d = 0; d < dims; ++d) {
            const auto channel = series[s].channel(d);
            for (std::size_t i = 0; i < n_windows; ++i) {
                const std::size_t row = s * per_series + d * n_windows + i;
                projector.project(channel.subspan(i, w), std::span<double>(matrix.data() + row * cols, cols),
                                  scratch);
            }
        }
    }

    TrainTransform out;
    out.binning.alphabet_size = params.alphabet_size;
    out.binning.thresholds.resize(cols);
    std::vector<double> column(rows);
    std::vector<double> window_labels(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        window_labels[r] = static_cast<double>(labels[r / per_series]);
    }
    for (std::size_t m = 0; m < cols; ++m) {
        for (std::size_t r = 0; r < rows; ++r) {
            column[r] = matrix[r * cols + m];
        }
        out.binning.thresholds[m] = fit_igb(column, window_labels, params.alphabet_size);
    }

    out.histograms.reserve(series.size());
    for (std::size_t s = 0; s < series.size(); ++s) {
        out.histograms.push_back(histogram_from_coefficients(
            dims, n_windows, params, out.binning, [&](std::size_t d, std::size_t i) {
                const std::size_t row = s * per_series + d * n_windows + i;
                return std::span<const double>(matrix.data() + row * cols, cols);
            }));
    }
    return out;
}

WordHistogram transform_one(const Series &series, const TransformParams &params, const BinningModel &model) {
    params.validate(series.length());
    if (model.thresholds.size() != static_cast<std::size_t>(params.word_length())) {
        throw Error(ErrorKind::ShapeMismatch, "binning model does not match the word length");
    }
    const std::size_t w = static_cast<std::size_t>(params.window_length);
    const std::size_t n_windows = series.length() - w + 1;
    FourierProjector projector(w, params.coefficient_count, params.normalize);
    std::vector<double> coeffs(projector.output_size());
    std::vector<double> scratch;
    return histogram_from_coefficients(series.dims(), n_windows, params, model, [&](std::size_t d, std::size_t i) {
        projector.project(series.channel(d).subspan(i, w), coeffs, scratch);
        return std::span<const double>(coeffs);
    });
}

} // namespace otde
