#pragma once

#include "otde/dataset.hpp"
#include "otde/individual.hpp"
#include "otde/sfa.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace otde {

/** Candidate transform configurations; enumerate() keeps only those valid for a series length. */
struct ParameterSpace {
    std::vector<int> window_lengths;
    std::vector<int> coefficient_counts;
    std::vector<int> alphabet_sizes;
    std::vector<bool> normalize_options;
    std::vector<bool> numerosity_options;

    /// w in [10, l] (at most 30 evenly spaced values), c in {2..8}, T = 4, both normalize options.
    [[nodiscard]] static ParameterSpace defaults(std::size_t series_length);

    /// Window lengths from w_min to w_max, thinned to at most `steps` evenly spaced values.
    [[nodiscard]] static std::vector<int> window_range(int w_min, int w_max, int steps);

    /// Valid configurations in lexicographic (w, c, T, normalize, numerosity) order.
    [[nodiscard]] std::vector<TransformParams> enumerate(std::size_t series_length) const;
    [[nodiscard]] bool contains(const TransformParams &params) const;
};

/// Min-max scaling of each parameter over the space; single-valued dimensions map to 0.
/// Throws OutOfSpace when params is not a member of the space.
[[nodiscard]] std::vector<double> encode_config(const TransformParams &params, const ParameterSpace &space);

enum class VoteMode { Ordinal, Nominal };

struct EnsembleOptions {
    std::size_t n_initial = 10;
    std::size_t n_evals = 50;
    std::size_t ensemble_size = 10;
    std::size_t candidate_pool = 100;
    double length_scale = 0.5;
    double noise_variance = 1e-3;
    double weight_exponent = 4.0;
    double subsample_fraction = kDefaultSubsampleFraction;
    VoteMode mode = VoteMode::Ordinal;
    HistogramDistance distance = HistogramDistance::Intersection;
    std::uint64_t seed = 0;
};

/// (1 - mae / (K - 1))^exponent, clamped to [0, 1].
[[nodiscard]] double member_weight(double train_mae, int num_classes, double exponent = 4.0);

/**
 * Weighted vote over class indices. Ordinal: the smallest class whose
 * cumulative weight reaches half the total (weighted median). Nominal: the
 * class with the largest summed weight, lowest class on ties.
 */
[[nodiscard]] int combine_votes(std::span<const int> votes, std::span<const double> weights, int num_classes,
                                VoteMode mode);

struct EnsembleMember {
    IndividualOTDE model;
    double train_mae = 0.0;
    double weight = 0.0;
    friend bool operator==(const EnsembleMember &, const EnsembleMember &) = default;
};

/** One evaluated configuration of the search, in evaluation order. */
struct SearchStep {
    TransformParams params;
    double loo_mae = 0.0;
    bool guided = false;             ///< chosen by the surrogate rather than at random
    double predicted_mae = 0.0;      ///< surrogate prediction when guided
    friend bool operator==(const SearchStep &, const SearchStep &) = default;
};

class OTDEnsemble {
public:
    OTDEnsemble(std::vector<EnsembleMember> members, int num_classes, VoteMode mode,
                std::vector<std::string> class_names = {}, std::vector<SearchStep> history = {});

    [[nodiscard]] int predict(const Series &x) const;
    /// Throws ShapeMismatch when the test data differ in dimensions or length.
    [[nodiscard]] std::vector<int> predict_dataset(const TimeSeriesDataset &test) const;

    [[nodiscard]] const std::vector<EnsembleMember> &members() const noexcept { return members_; }
    [[nodiscard]] int num_classes() const noexcept { return num_classes_; }
    [[nodiscard]] VoteMode mode() const noexcept { return mode_; }
    [[nodiscard]] const std::vector<std::string> &class_names() const noexcept { return class_names_; }
    [[nodiscard]] const std::vector<SearchStep> &history() const noexcept { return history_; }
    [[nodiscard]] std::size_t dims() const noexcept { return members_.front().model.dims(); }
    [[nodiscard]] std::size_t length() const noexcept { return members_.front().model.length(); }

    /// Same members, different combination rule.
    [[nodiscard]] OTDEnsemble with_mode(VoteMode mode) const;

    friend bool operator==(const OTDEnsemble &, const OTDEnsemble &) = default;

private:
    std::vector<EnsembleMember> members_;
    int num_classes_;
    VoteMode mode_;
    std::vector<std::string> class_names_;
    std::vector<SearchStep> history_;
};

/**
 * Surrogate-guided ensemble construction.
 *
 * Evaluates n_initial random configurations by leave-one-out MAE, then until
 * n_evals evaluations (or the space runs out) fits the GP on all pairs seen so
 * far and evaluates the candidate with the lowest predicted MAE among
 * `candidate_pool` random unseen ones. The ensemble_size best configurations
 * are refitted on the full training set.
 */
[[nodiscard]] OTDEnsemble guided_search(const TimeSeriesDataset &train, const ParameterSpace &space,
                                        const EnsembleOptions &options = {});

} // namespace otde
