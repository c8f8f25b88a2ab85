#include "otde/ensemble.hpp"

#include "otde/error.hpp"
#include "otde/gp.hpp"
#include "otde/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace otde {

std::vector<int> ParameterSpace::window_range(int w_min, int w_max, int steps) {
    std::vector<int> out;
    if (w_max < w_min || steps < 1) {
        return out;
    }
    const int span = w_max - w_min;
    if (span + 1 <= steps) {
        for (int w = w_min; w <= w_max; ++w) {
            out.push_back(w);
        }
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
        out.push_back(w_min + static_cast<int>(std::lround(t * span)));
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ParameterSpace ParameterSpace::defaults(std::size_t series_length) {
    const int l = static_cast<int>(series_length);
    ParameterSpace space;
    space.window_lengths = window_range(std::min(10, l), l, 30);
    for (int c = 2; c <= 8; ++c) {
        if (2 * c <= l) {
            space.coefficient_counts.push_back(c);
        }
    }
    if (space.coefficient_counts.empty()) {
        space.coefficient_counts.push_back(1);
    }
    space.alphabet_sizes = {4};
    space.normalize_options = {true, false};
    space.numerosity_options = {true};
    return space;
}

std::vector<TransformParams> ParameterSpace::enumerate(std::size_t series_length) const {
    std::vector<TransformParams> out;
    for (int w : window_lengths) {
        for (int c : coefficient_counts) {
            for (int t : alphabet_sizes) {
                for (bool norm : normalize_options) {
                    for (bool nr : numerosity_options) {
                        TransformParams p{w, c, t, norm, nr};
                        if (w >= 1 && c >= 1 && t >= 2 && static_cast<std::size_t>(w) <= series_length &&
                            2 * c <= w) {
                            out.push_back(p);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

template <typename T>
bool has(const std::vector<T> &items, T value) {
    return std::find(items.begin(), items.end(), value) != items.end();
}

template <typename T>
double scale(const std::vector<T> &items, T value) {
    const auto [lo, hi] = std::minmax_element(items.begin(), items.end());
    const double min = static_cast<double>(*lo);
    const double max = static_cast<double>(*hi);
    return max > min ? (static_cast<double>(value) - min) / (max - min) : 0.0;
}

} // namespace

bool ParameterSpace::contains(const TransformParams &p) const {
    return has(window_lengths, p.window_length) && has(coefficient_counts, p.coefficient_count) &&
           has(alphabet_sizes, p.alphabet_size) && has(normalize_options, p.normalize) &&
           has(numerosity_options, p.numerosity_reduction);
}

std::vector<double> encode_config(const TransformParams &p, const ParameterSpace &space) {
    if (!space.contains(p)) {
        throw Error(ErrorKind::OutOfSpace, "configuration is not a member of the parameter space");
    }
    return {scale(space.window_lengths, p.window_length), scale(space.coefficient_counts, p.coefficient_count),
            scale(space.alphabet_sizes, p.alphabet_size),
            scale(space.normalize_options, p.normalize),
            scale(space.numerosity_options, p.numerosity_reduction)};
}

double member_weight(double train_mae, int num_classes, double exponent) {
    if (num_classes < 2) {
        return 1.0;
    }
    const double base = std::clamp(1.0 - train_mae / static_cast<double>(num_classes - 1), 0.0, 1.0);
    return std::pow(base, exponent);
}

int combine_votes(std::span<const int> votes, std::span<const double> weights, int num_classes, VoteMode mode) {
    if (votes.size() != weights.size() || votes.empty()) {
        throw Error(ErrorKind::LengthMismatch, "need one weight per vote");
    }
    std::vector<double> score(static_cast<std::size_t>(num_classes), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < votes.size(); ++i) {
        score.at(static_cast<std::size_t>(votes[i])) += weights[i];
        total += weights[i];
    }
    if (!(total > 0.0)) {
        // every member at the worst possible MAE: fall back to equal weights
        std::fill(score.begin(), score.end(), 0.0);
        for (int v : votes) {
            score[static_cast<std::size_t>(v)] += 1.0;
        }
        total = static_cast<double>(votes.size());
    }
    if (mode == VoteMode::Nominal) {
        return static_cast<int>(std::max_element(score.begin(), score.end()) - score.begin());
    }
    double cumulative = 0.0;
    for (int k = 0; k < num_classes; ++k) {
        cumulative += score[static_cast<std::size_t>(k)];
        if (2.0 * cumulative >= total) {
            return k;
        }
    }
    return num_classes - 1;
}

OTDEnsemble::OTDEnsemble(std::vector<EnsembleMember> members, int num_classes, VoteMode mode,
                         std::vector<std::string> class_names, std::vector<SearchStep> history)
    : members_(std::move(members)), num_classes_(num_classes), mode_(mode), class_names_(std::move(class_names)),
      history_(std::move(history)) {
    if (members_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "ensemble needs at least one member");
    }
    if (class_names_.empty()) {
        for (int k = 0; k < num_classes_; ++k) {
            class_names_.push_back(std::to_string(k));
        }
    }
    std::stable_sort(members_.begin(), members_.end(),
                     [](const EnsembleMember &a, const EnsembleMember &b) { return a.train_mae < b.train_mae; });
}

int OTDEnsemble::predict(const Series &x) const {
    std::vector<int> votes;
    std::vector<double> weights;
    votes.reserve(members_.size());
    weights.reserve(members_.size());
    for (const auto &m : members_) {
        votes.push_back(m.model.predict_one(x));
        weights.push_back(m.weight);
    }
    return combine_votes(votes, weights, num_classes_, mode_);
}

std::vector<int> OTDEnsemble::predict_dataset(const TimeSeriesDataset &test) const {
    if (test.dims() != dims() || test.length() != length()) {
        throw Error(ErrorKind::ShapeMismatch, "test data are " + std::to_string(test.dims()) + "x" +
                                                  std::to_string(test.length()) + ", model expects " +
                                                  std::to_string(dims()) + "x" + std::to_string(length()));
    }
    std::vector<int> out;
    out.reserve(test.size());
    for (const auto &s : test.series()) {
        out.push_back(predict(s));
    }
    return out;
}

OTDEnsemble OTDEnsemble::with_mode(VoteMode mode) const {
    OTDEnsemble copy = *this;
    copy.mode_ = mode;
    return copy;
}

OTDEnsemble guided_search(const TimeSeriesDataset &train, const ParameterSpace &space,
                          const EnsembleOptions &options) {
    if (options.ensemble_size < 1) {
        throw Error(ErrorKind::InvalidArgument, "ensemble_size must be at least 1");
    }
    if (options.n_initial > options.n_evals) {
        throw Error(ErrorKind::InvalidArgument, "n_initial must not exceed n_evals");
    }
    const auto configs = space.enumerate(train.length());
    if (configs.empty()) {
        throw Error(ErrorKind::OutOfSpace, "parameter space has no configuration valid for length " +
                                               std::to_string(train.length()));
    }

    Rng rng(options.seed);
    std::vector<std::size_t> unseen(configs.size());
    std::iota(unseen.begin(), unseen.end(), std::size_t{0});
    std::vector<std::size_t> evaluated;
    std::vector<SearchStep> history;
    std::vector<std::vector<double>> encoded;
    std::vector<double> maes;

    auto evaluate = [&](std::size_t pos_in_unseen, bool guided, double predicted) {
        const std::size_t idx = unseen[pos_in_unseen];
        unseen.erase(unseen.begin() + static_cast<std::ptrdiff_t>(pos_in_unseen));
        const double mae =
            loo_mae(train, configs[idx], options.subsample_fraction, options.seed, options.distance);
        evaluated.push_back(idx);
        encoded.push_back(encode_config(configs[idx], space));
        maes.push_back(mae);
        history.push_back({configs[idx], mae, guided, guided ? predicted : 0.0});
    };

    const std::size_t budget = std::min(options.n_evals, configs.size());
    const std::size_t initial = std::clamp<std::size_t>(options.n_initial, 1, budget);
    for (std::size_t k = 0; k < initial; ++k) {
        evaluate(rng.index(unseen.size()), false, 0.0);
    }
    while (evaluated.size() < budget) {
        const auto gp = GPSurrogate::fit(encoded, maes, options.length_scale, options.noise_variance);
        const auto pool = rng.sample_indices(unseen.size(), std::min(options.candidate_pool, unseen.size()));
        std::size_t best = pool.front();
        double best_pred = gp.predict_mean(encode_config(configs[unseen[best]], space));
        for (std::size_t i = 1; i < pool.size(); ++i) {
            const double pred = gp.predict_mean(encode_config(configs[unseen[pool[i]]], space));
            if (pred < best_pred) {
                best = pool[i];
                best_pred = pred;
            }
        }
        evaluate(best, true, best_pred);
    }

    // best configurations by (observed MAE, enumeration order)
    std::vector<std::size_t> ranked(evaluated.size());
    std::iota(ranked.begin(), ranked.end(), std::size_t{0});
    std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
        return maes[a] != maes[b] ? maes[a] < maes[b] : evaluated[a] < evaluated[b];
    });
    ranked.resize(std::min(options.ensemble_size, ranked.size()));

    std::vector<EnsembleMember> members;
    for (std::size_t r : ranked) {
        members.push_back({IndividualOTDE::fit(train, configs[evaluated[r]], options.distance), maes[r],
                           member_weight(maes[r], train.num_classes(), options.weight_exponent)});
    }
    return {std::move(members), train.num_classes(), options.mode, train.class_names(), std::move(history)};
}

} // namespace otde
