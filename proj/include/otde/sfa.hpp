#pragma once

#include "otde/dataset.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace otde {

/** Parameters of one symbolic Fourier word transform. */
struct TransformParams {
    int window_length = 10;
    int coefficient_count = 2;
    int alphabet_size = 4;
    bool normalize = true;
    bool numerosity_reduction = true;

    [[nodiscard]] int word_length() const noexcept { return 2 * coefficient_count; }

    /// Throws WindowTooLong / TooManyCoefficients / InvalidArgument for a series of this length.
    void validate(std::size_t series_length) const;

    friend bool operator==(const TransformParams &, const TransformParams &) = default;
    friend auto operator<=>(const TransformParams &, const TransformParams &) = default;
};

/// All l-w+1 stride-1 windows of x, in order. Throws WindowTooLong when w > l.
[[nodiscard]] std::vector<std::vector<double>> sliding_windows(std::span<const double> x, std::size_t w);

inline constexpr double kFlatWindowStd = 1e-8;

/// Zero mean; unit population standard deviation unless the window is flat, then all zeros.
[[nodiscard]] std::vector<double> z_normalize(std::span<const double> window);

/**
 * Truncated DFT of a fixed-length window, F_j = sum_k x_k exp(-2 pi i j k / w),
 * laid out as (re_j0, im_j0, re_j0+1, im_j0+1, ...).
 *
 * With normalize the window is z-normalised first and the series starts at
 * j = 1 instead of j = 0, since the mean coefficient of a z-normalised window is zero.
 */
class FourierProjector {
public:
    FourierProjector(std::size_t window_length, int coefficient_count, bool normalize);

    [[nodiscard]] std::size_t window_length() const noexcept { return w_; }
    [[nodiscard]] std::size_t output_size() const noexcept { return 2 * static_cast<std::size_t>(c_); }

    /// out.size() must equal output_size(). scratch is reused between calls.
    void project(std::span<const double> window, std::span<double> out, std::vector<double> &scratch) const;
    [[nodiscard]] std::vector<double> project(std::span<const double> window) const;

private:
    std::size_t w_;
    int c_;
    bool normalize_;
    std::vector<double> cos_; // c rows of w entries
    std::vector<double> sin_;
};

/// Throws TooManyCoefficients when 2c > |window|.
[[nodiscard]] std::vector<double> dft_coefficients(std::span<const double> window, int c, bool normalize);

/**
 * Information-gain binning of one coefficient column.
 *
 * Grows a best-first regression tree on the single feature: each step takes,
 * over all current leaves, the split with the largest Friedman improvement
 * (n_l n_r / (n_l + n_r)) (mean_l - mean_r)^2, candidate thresholds being
 * midpoints of consecutive distinct values. Equal improvements resolve to the
 * smaller threshold. Stops at `alphabet_size` leaves or when nothing improves.
 * Returns the sorted thresholds.
 */
[[nodiscard]] std::vector<double> fit_igb(std::span<const double> values, std::span<const double> labels,
                                          int alphabet_size);

/** Interior cut-points per coefficient column; -inf/+inf ends are implicit. */
struct BinningModel {
    int alphabet_size = 4;
    std::vector<std::vector<double>> thresholds;

    /// Index t of the half-open interval [beta_t, beta_t+1) holding v.
    [[nodiscard]] int symbol(std::size_t column, double v) const;

    friend bool operator==(const BinningModel &, const BinningModel &) = default;
};

struct Word {
    std::vector<std::uint8_t> symbols;
    friend bool operator==(const Word &, const Word &) = default;
};

[[nodiscard]] Word symbolize(std::span<const double> coeffs, const BinningModel &model);

/// Base-T digits of the word, prefixed by the dimension index.
[[nodiscard]] std::uint64_t encode_word(const Word &word, int alphabet_size, std::size_t dim = 0);
[[nodiscard]] std::pair<std::size_t, Word> decode_word(std::uint64_t code, int alphabet_size, int word_length);

/** Sparse word counts kept sorted by word code. */
class WordHistogram {
public:
    using Entry = std::pair<std::uint64_t, std::uint32_t>;

    WordHistogram() = default;
    /// Counts occurrences of each code in `words` (any order).
    static WordHistogram from_words(std::vector<std::uint64_t> words);
    /// Entries must be sorted by code, unique, with positive counts.
    static WordHistogram from_entries(std::vector<Entry> entries);

    [[nodiscard]] const std::vector<Entry> &entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t distinct() const noexcept { return entries_.size(); }
    [[nodiscard]] std::uint64_t total() const noexcept { return total_; }
    [[nodiscard]] std::uint32_t count(std::uint64_t word) const;

    friend bool operator==(const WordHistogram &, const WordHistogram &) = default;

private:
    std::vector<Entry> entries_;
    std::uint64_t total_ = 0;
};

struct TrainTransform {
    BinningModel binning;
    std::vector<WordHistogram> histograms;
};

/**
 * Fits binning on the coefficient matrix of every training window (each
 * window inheriting its series' label) and returns the training histograms.
 * Multivariate series contribute the windows of every dimension to the same
 * columns; words are tagged with their dimension.
 */
[[nodiscard]] TrainTransform fit_transform_train(std::span<const Series> series, std::span<const int> labels,
                                                 const TransformParams &params);

[[nodiscard]] WordHistogram transform_one(const Series &series, const TransformParams &params,
                                          const BinningModel &model);

} // namespace otde
