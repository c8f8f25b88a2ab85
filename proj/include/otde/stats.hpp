#pragma once

#include <span>
#include <string>
#include <vector>

namespace otde {

enum class WilcoxonMethod {
    Auto,   ///< exact for n <= kWilcoxonExactLimit non-zero differences, normal otherwise
    Exact,
    Normal, ///< normal approximation with tie and continuity correction
};

inline constexpr std::size_t kWilcoxonExactLimit = 12;

struct WilcoxonResult {
    double p_value = 1.0;
    double w_plus = 0.0;     ///< sum of ranks of positive differences
    std::size_t n = 0;       ///< non-zero differences
    bool exact = false;
    bool degenerate = false; ///< every difference was zero; p_value is 1
};

/// Two-sided signed-rank test of a - b. Zero differences are dropped, tied |differences| share ranks.
[[nodiscard]] WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                                  WilcoxonMethod method = WilcoxonMethod::Auto);

/// Holm step-down adjustment, returned in input order.
[[nodiscard]] std::vector<double> holm_adjust(std::span<const double> p_values);

enum class TieMethod {
    Average, ///< tied values share the mean of their ranks
    Min,     ///< tied values all take the best rank of the group
};

/// Ranks of `values` (1 = best). lower_is_better selects the ordering.
[[nodiscard]] std::vector<double> rank_values(std::span<const double> values, bool lower_is_better,
                                              TieMethod ties = TieMethod::Average);

struct RankTable {
    std::vector<std::string> methods;
    std::vector<std::string> datasets;
    std::vector<std::vector<double>> values; ///< [dataset][method] mean metric
    std::vector<std::vector<double>> ranks;  ///< [dataset][method]
    std::vector<double> average_ranks;       ///< per method

    /// Method indices by ascending average rank (stable).
    [[nodiscard]] std::vector<std::size_t> order() const;
};

/// Ranks a complete dataset x method grid. Throws IncompleteGrid on non-finite cells or ragged rows.
[[nodiscard]] RankTable rank_grid(std::vector<std::string> methods, std::vector<std::string> datasets,
                                  std::vector<std::vector<double>> values, bool lower_is_better,
                                  TieMethod ties = TieMethod::Average);

/** Symmetric matrix of adjusted p-values between methods. */
struct PairwiseTests {
    std::vector<std::string> methods;
    std::vector<std::vector<double>> raw_p;
    std::vector<std::vector<double>> adjusted_p;
    std::vector<std::vector<bool>> degenerate;
};

/// Wilcoxon test for every method pair over the per-dataset values, Holm-adjusted across pairs.
[[nodiscard]] PairwiseTests pairwise_wilcoxon(const RankTable &table);

/**
 * Maximal runs of methods, contiguous in average-rank order, in which no pair
 * differs significantly (adjusted p < alpha). Each clique lists method indices
 * in rank order. Singletons are included.
 */
[[nodiscard]] std::vector<std::vector<std::size_t>> form_cliques(const RankTable &table,
                                                                 const std::vector<std::vector<double>> &adjusted_p,
                                                                 double alpha);

inline constexpr double kCliqueAlpha = 0.1;

} // namespace otde
