#include "otde/stats.hpp"

#include "otde/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace otde {

namespace {

/// Average ranks (1-based) of ascending values, plus the tie-group sizes.
std::vector<double> average_ascending_ranks(std::span<const double> values, std::vector<std::size_t> *ties) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = rank;
        }
        if (ties != nullptr) {
            ties->push_back(j - i);
        }
        i = j;
    }
    return ranks;
}

double exact_p_value(const std::vector<double> &ranks, double w_plus) {
    // doubled ranks are integers even when ties produce half ranks
    std::vector<std::size_t> doubled;
    std::size_t max_sum = 0;
    for (double r : ranks) {
        doubled.push_back(static_cast<std::size_t>(std::lround(2.0 * r)));
        max_sum += doubled.back();
    }
    std::vector<double> counts(max_sum + 1, 0.0);
    counts[0] = 1.0;
    std::size_t reach = 0;
    for (std::size_t r : doubled) {
        for (std::size_t s = reach + 1; s-- > 0;) {
            if (counts[s] != 0.0) {
                counts[s + r] += counts[s];
            }
        }
        reach += r;
    }
    const auto target = static_cast<std::size_t>(std::lround(2.0 * w_plus));
    const double all = std::ldexp(1.0, static_cast<int>(ranks.size()));
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
        if (s <= target) {
            lower += counts[s];
        }
        if (s >= target) {
            upper += counts[s];
        }
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

double normal_p_value(std::size_t n_, const std::vector<std::size_t> &ties, double w_plus) {
    const double n = static_cast<double>(n_);
    const double mean = n * (n + 1.0) / 4.0;
    double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    for (std::size_t t : ties) {
        const double tt = static_cast<double>(t);
        variance -= (tt * tt * tt - tt) / 48.0;
    }
    if (!(variance > 0.0)) {
        return 1.0;
    }
    const double z = std::max(std::abs(w_plus - mean) - 0.5, 0.0) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

} // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b, WilcoxonMethod method) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::LengthMismatch, "paired samples differ in length");
    }
    std::vector<double> diffs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) {
            diffs.push_back(d);
        }
    }
    WilcoxonResult result;
    result.n = diffs.size();
    if (diffs.empty()) {
        result.degenerate = true;
        return result;
    }
    std::vector<double> magnitudes;
    for (double d : diffs) {
        magnitudes.push_back(std::abs(d));
    }
    std::vector<std::size_t> ties;
    const auto ranks = average_ascending_ranks(magnitudes, &ties);
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] > 0.0) {
            result.w_plus += ranks[i];
        }
    }
    result.exact = method == WilcoxonMethod::Exact ||
                   (method == WilcoxonMethod::Auto && result.n <= kWilcoxonExactLimit);
    result.p_value = result.exact ? exact_p_value(ranks, result.w_plus) : normal_p_value(result.n, ties, result.w_plus);
    return result;
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
    for (double p : p_values) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorKind::InvalidArgument, "p-values must lie in [0, 1]");
        }
    }
    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p_values[x] < p_values[y]; });
    std::vector<double> adjusted(m);
    double running = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        running = std::max(running, std::min(1.0, static_cast<double>(m - i) * p_values[order[i]]));
        adjusted[order[i]] = running;
    }
    return adjusted;
}

std::vector<double> rank_values(std::span<const double> values, bool lower_is_better, TieMethod ties) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lower_is_better ? values[a] < values[b] : values[a] > values[b];
    });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && values[order[j]] == values[order[i]]) {
            ++j;
        }
        const double rank = ties == TieMethod::Average
                                ? (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0
                                : static_cast<double>(i + 1);
        for (std::size_t k = i; k < j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j;
    }
    return ranks;
}

std::vector<std::size_t> RankTable::order() const {
    std::vector<std::size_t> idx(methods.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return average_ranks[a] < average_ranks[b]; });
    return idx;
}

RankTable rank_grid(std::vector<std::string> methods, std::vector<std::string> datasets,
                    std::vector<std::vector<double>> values, bool lower_is_better, TieMethod ties) {
    if (methods.empty() || datasets.empty() || values.size() != datasets.size()) {
        throw Error(ErrorKind::IncompleteGrid, "rank grid needs one row per dataset");
    }
    RankTable table;
    table.average_ranks.assign(methods.size(), 0.0);
    for (std::size_t d = 0; d < values.size(); ++d) {
        if (values[d].size() != methods.size()) {
            throw Error(ErrorKind::IncompleteGrid, "dataset '" + datasets[d] + "' lacks a value for some method");
        }
        for (std::size_t m = 0; m < methods.size(); ++m) {
            if (!std::isfinite(values[d][m])) {
                throw Error(ErrorKind::IncompleteGrid,
                            "no value for method '" + methods[m] + "' on dataset '" + datasets[d] + "'");
            }
        }
        auto row = rank_values(values[d], lower_is_better, ties);
        for (std::size_t m = 0; m < methods.size(); ++m) {
            table.average_ranks[m] += row[m];
        }
        table.ranks.push_back(std::move(row));
    }
    for (double &r : table.average_ranks) {
        r /= static_cast<double>(values.size());
    }
    table.methods = std::move(methods);
    table.datasets = std::move(datasets);
    table.values = std::move(values);
    return table;
}

PairwiseTests pairwise_wilcoxon(const RankTable &table) {
    const std::size_t m = table.methods.size();
    PairwiseTests out;
    out.methods = table.methods;
    out.raw_p.assign(m, std::vector<double>(m, 1.0));
    out.adjusted_p.assign(m, std::vector<double>(m, 1.0));
    out.degenerate.assign(m, std::vector<bool>(m, false));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<double> raw;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            std::vector<double> a, b;
            for (const auto &row : table.values) {
                a.push_back(row[i]);
                b.push_back(row[j]);
            }
            const auto r = wilcoxon_signed_rank(a, b);
            out.raw_p[i][j] = out.raw_p[j][i] = r.p_value;
            out.degenerate[i][j] = out.degenerate[j][i] = r.degenerate;
            pairs.emplace_back(i, j);
            raw.push_back(r.p_value);
        }
    }
    const auto adjusted = holm_adjust(raw);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        out.adjusted_p[i][j] = out.adjusted_p[j][i] = adjusted[k];
    }
    return out;
}

std::vector<std::vector<std::size_t>> form_cliques(const RankTable &table,
                                                   const std::vector<std::vector<double>> &adjusted_p, double alpha) {
    const auto order = table.order();
    const std::size_t m = order.size();
    auto significant = [&](std::size_t a, std::size_t b) { return adjusted_p.at(order[a]).at(order[b]) < alpha; };

    std::vector<std::vector<std::size_t>> cliques;
    std::size_t previous_end = 0;
    for (std::size_t start = 0; start < m; ++start) {
        std::size_t end = start;
        while (end + 1 < m) {
            bool ok = true;
            for (std::size_t k = start; k <= end && ok; ++k) {
                ok = !significant(k, end + 1);
            }
            if (!ok) {
                break;
            }
            ++end;
        }
        // the run ending is non-decreasing in start, so a new maximal run extends past the last one
        if (start == 0 || end > previous_end) {
            std::vector<std::size_t> clique;
            for (std::size_t k = start; k <= end; ++k) {
                clique.push_back(order[k]);
            }
            cliques.push_back(std::move(clique));
        }
        previous_end = std::max(previous_end, end);
    }
    return cliques;
}

} // namespace otde
