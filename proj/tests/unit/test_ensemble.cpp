#include "otde/ensemble.hpp"
#include "otde/gp.hpp"
#include "otde/ts_format.hpp"

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace otde;
using testing::error_kind;

namespace {

/// Weighted median straight from the definition: smallest class whose cumulative weight reaches half.
int median_rule(const std::vector<int> &votes, const std::vector<double> &weights, int k) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    for (int q = 0; q < k; ++q) {
        double cum = 0;
        for (std::size_t i = 0; i < votes.size(); ++i) {
            if (votes[i] <= q) {
                cum += weights[i];
            }
        }
        if (cum >= total / 2) {
            return q;
        }
    }
    return k - 1;
}

int argmax_rule(const std::vector<int> &votes, const std::vector<double> &weights, int k) {
    int best = 0;
    double best_w = -1;
    for (int q = 0; q < k; ++q) {
        double w = 0;
        for (std::size_t i = 0; i < votes.size(); ++i) {
            if (votes[i] == q) {
                w += weights[i];
            }
        }
        if (w > best_w) {
            best = q;
            best_w = w;
        }
    }
    return best;
}

ParameterSpace small_space() {
    ParameterSpace s;
    s.window_lengths = {8, 12, 16};
    s.coefficient_counts = {2, 3};
    s.alphabet_sizes = {3, 4};
    s.normalize_options = {true, false};
    s.numerosity_options = {true};
    return s;
}

} // namespace

TEST_CASE("default parameter space", "[ensemble]") {
    const auto s = ParameterSpace::defaults(128);
    CHECK(s.window_lengths.front() == 10);
    CHECK(s.window_lengths.back() == 128);
    CHECK(s.window_lengths.size() <= 30);
    CHECK(std::is_sorted(s.window_lengths.begin(), s.window_lengths.end()));
    CHECK(s.coefficient_counts == std::vector<int>{2, 3, 4, 5, 6, 7, 8});
    CHECK(s.alphabet_sizes == std::vector<int>{4});
    for (const auto &p : s.enumerate(128)) {
        CHECK_FALSE(error_kind([&] { p.validate(128); }));
    }
    const auto short_space = ParameterSpace::defaults(6);
    CHECK(short_space.window_lengths == std::vector<int>{6});
    CHECK(short_space.coefficient_counts == std::vector<int>{2, 3});
    CHECK(ParameterSpace::window_range(10, 12, 30) == std::vector<int>{10, 11, 12});
}

TEST_CASE("configuration encoding", "[ensemble]") {
    const auto s = small_space();
    CHECK(encode_config({8, 2, 3, false, true}, s) == std::vector<double>{0, 0, 0, 0, 0});
    CHECK(encode_config({16, 3, 4, true, true}, s) == std::vector<double>{1, 1, 1, 1, 0});
    CHECK(error_kind([&] { (void)encode_config({9, 2, 3, true, true}, s); }) == ErrorKind::OutOfSpace);
    CHECK(error_kind([&] { (void)encode_config({8, 2, 3, true, false}, s); }) == ErrorKind::OutOfSpace);

    const auto big = ParameterSpace::defaults(200);
    const auto all = big.enumerate(200);
    std::mt19937_64 gen(1);
    std::set<std::vector<double>> seen;
    for (int i = 0; i < 100; ++i) {
        const auto &p = all[gen() % all.size()];
        const auto e = encode_config(p, big);
        for (double v : e) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        seen.insert(e);
    }
    std::set<TransformParams> distinct;
    gen.seed(1);
    for (int i = 0; i < 100; ++i) {
        distinct.insert(all[gen() % all.size()]);
    }
    CHECK(seen.size() == distinct.size());
}

TEST_CASE("GP surrogate", "[ensemble][gp]") {
    SECTION("single observation") {
        const auto gp = GPSurrogate::fit({{0.3, 0.7}}, {0.42}, 0.5, 0.0);
        CHECK(std::abs(gp.predict_mean(std::vector<double>{0.3, 0.7}) - 0.42) < 1e-9);
    }
    SECTION("far from the data the prior mean returns") {
        const auto gp = GPSurrogate::fit({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}, {0.1, 0.5, 0.9}, 0.5, 1e-3);
        CHECK(gp.prior_mean() == Catch::Approx(0.5));
        CHECK(std::abs(gp.predict_mean(std::vector<double>{50.0, 50.0}) - 0.5) < 1e-6);
    }
    SECTION("noise-free interpolation matches a direct solve") {
        std::mt19937_64 gen(2);
        std::uniform_real_distribution<double> u(0, 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<double>> x(5, std::vector<double>(3));
            std::vector<double> y(5);
            for (auto &row : x) {
                for (double &v : row) {
                    v = u(gen);
                }
            }
            for (double &v : y) {
                v = u(gen);
            }
            const auto gp = GPSurrogate::fit(x, y, 0.5, 0.0);
            for (std::size_t i = 0; i < 5; ++i) {
                CHECK(std::abs(gp.predict_mean(x[i]) - y[i]) < 1e-6);
            }
            const std::vector<double> q{u(gen), u(gen), u(gen)};
            CHECK(gp.predict_mean(q) == Catch::Approx(oracle::gp_mean(x, y, 0.5, 0.0, q)).margin(1e-7));
            CHECK(gp.predict_mean(q) == Catch::Approx(oracle::gp_mean(x, y, 0.5, 1e-3, q)).margin(0.5));
            const auto noisy = GPSurrogate::fit(x, y, 0.5, 1e-3);
            CHECK(noisy.predict_mean(q) == Catch::Approx(oracle::gp_mean(x, y, 0.5, 1e-3, q)).margin(1e-9));
        }
    }
    SECTION("duplicate points need jitter") {
        const auto gp = GPSurrogate::fit({{0.5}, {0.5}}, {0.2, 0.2}, 0.5, 0.0);
        CHECK(gp.jitter() > 0.0);
        CHECK(gp.jitter() <= 1e-6);
        CHECK(gp.predict_mean(std::vector<double>{0.5}) == Catch::Approx(0.2).margin(1e-6));
    }
    SECTION("failures") {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        CHECK(error_kind([&] { (void)GPSurrogate::fit({{nan}}, {0.1}, 0.5, 0.0); }) == ErrorKind::InvalidArgument);
        CHECK(error_kind([&] { (void)GPSurrogate::fit({{0.1}}, {nan}, 0.5, 0.0); }) == ErrorKind::InvalidArgument);
        CHECK(error_kind([] { (void)GPSurrogate::fit({}, {}, 0.5, 0.0); }) == ErrorKind::InvalidArgument);
        CHECK(error_kind([] { (void)GPSurrogate::fit({{0.1}}, {0.1}, 0.0, 0.0); }) == ErrorKind::InvalidArgument);
        CHECK(error_kind([] { (void)GPSurrogate::fit({{0.1}, {0.1, 0.2}}, {0.1, 0.2}, 0.5, 0.0); }) ==
              ErrorKind::ShapeMismatch);
    }
}

TEST_CASE("member weights", "[ensemble]") {
    CHECK(member_weight(0.0, 5) == 1.0);
    CHECK(member_weight(4.0, 5) == 0.0);
    CHECK(member_weight(2.0, 5) == Catch::Approx(0.0625));
    CHECK(member_weight(1.0, 3, 2.0) == Catch::Approx(0.25));
    double previous = 2.0;
    for (double m = 0.0; m <= 4.0; m += 0.25) {
        const double w = member_weight(m, 5);
        CHECK(w >= 0.0);
        CHECK(w <= 1.0);
        if (m < 4.0) {
            CHECK(w < previous);
        }
        previous = w;
    }
}

TEST_CASE("vote combination", "[ensemble]") {
    const std::vector<int> agree{2, 2, 2};
    const std::vector<double> w3{0.5, 0.3, 0.2};
    CHECK(combine_votes(agree, w3, 4, VoteMode::Ordinal) == 2);
    CHECK(combine_votes(agree, w3, 4, VoteMode::Nominal) == 2);

    const std::vector<int> split{0, 2, 2};
    CHECK(combine_votes(split, w3, 3, VoteMode::Nominal) == 0);
    CHECK(combine_votes(split, w3, 3, VoteMode::Ordinal) == 0);
    CHECK(argmax_rule(split, w3, 3) == 0);
    CHECK(median_rule(split, w3, 3) == 0);

    // ordinal and nominal part ways
    const std::vector<int> spread{0, 3, 4};
    const std::vector<double> ws{0.4, 0.3, 0.3};
    CHECK(combine_votes(spread, ws, 5, VoteMode::Nominal) == 0);
    CHECK(combine_votes(spread, ws, 5, VoteMode::Ordinal) == 3);

    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(combine_votes(std::vector<int>{1, 3, 3}, zeros, 4, VoteMode::Nominal) == 3);
    CHECK(combine_votes(std::vector<int>{1, 3, 3}, zeros, 4, VoteMode::Ordinal) == 3);
    CHECK(error_kind([] { (void)combine_votes(std::vector<int>{1}, std::vector<double>{}, 3, VoteMode::Ordinal); }) ==
          ErrorKind::LengthMismatch);
}

TEST_CASE("vote rules agree with direct evaluation; the median shifts with its votes", "[ensemble][property]") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const int k = 3 + static_cast<int>(gen() % 5);
        const auto n = static_cast<std::size_t>(1 + gen() % 8);
        std::vector<int> votes(n);
        std::vector<double> weights(n);
        for (std::size_t i = 0; i < n; ++i) {
            votes[i] = static_cast<int>(gen() % static_cast<std::uint64_t>(k - 1));
            // dyadic weights keep sums exact so the two evaluations see identical totals
            weights[i] = static_cast<double>(1 + gen() % 16) / 16.0;
        }
        const int ord = combine_votes(votes, weights, k, VoteMode::Ordinal);
        CHECK(ord == median_rule(votes, weights, k));
        CHECK(combine_votes(votes, weights, k, VoteMode::Nominal) == argmax_rule(votes, weights, k));
        auto shifted = votes;
        for (int &v : shifted) {
            ++v;
        }
        CHECK(combine_votes(shifted, weights, k, VoteMode::Ordinal) == ord + 1);
    }
}

TEST_CASE("guided search", "[ensemble]") {
    const auto train = read_dataset(testing::fixture("ordinal4_TRAIN.ts"));
    const auto test = read_dataset(testing::fixture("ordinal4_TEST.ts"));
    const auto space = small_space();

    SECTION("one evaluation gives one member equal to a direct fit") {
        EnsembleOptions o;
        o.n_initial = o.n_evals = o.ensemble_size = 1;
        const auto e = guided_search(train, space, o);
        REQUIRE(e.members().size() == 1);
        REQUIRE(e.history().size() == 1);
        const auto direct = IndividualOTDE::fit(train, e.history()[0].params);
        CHECK(e.members()[0].model == direct);
        CHECK(e.members()[0].train_mae == loo_mae(train, direct.params(), o.subsample_fraction, o.seed));
        for (const auto &s : test.series()) {
            CHECK(e.predict(s) == direct.predict_one(s));
        }
    }
    SECTION("a space of three configurations stops after three evaluations") {
        ParameterSpace tiny;
        tiny.window_lengths = {8, 10, 12};
        tiny.coefficient_counts = {2};
        tiny.alphabet_sizes = {4};
        tiny.normalize_options = {true};
        tiny.numerosity_options = {true};
        EnsembleOptions o;
        o.n_initial = 2;
        o.n_evals = 10;
        const auto e = guided_search(train, tiny, o);
        CHECK(e.history().size() == 3);
        CHECK(e.members().size() == 3);
    }
    SECTION("reproducible under a fixed seed") {
        EnsembleOptions o;
        o.n_initial = 4;
        o.n_evals = 12;
        o.ensemble_size = 5;
        o.seed = 17;
        const auto a = guided_search(train, space, o);
        const auto b = guided_search(train, space, o);
        CHECK(a == b);
        CHECK(a.predict_dataset(test) == b.predict_dataset(test));
        for (std::size_t i = 0; i < a.history().size(); ++i) {
            CHECK(a.history()[i].guided == (i >= 4));
        }
        o.seed = 18;
        CHECK_FALSE(guided_search(train, space, o).history() == a.history());
    }
    SECTION("members are sorted and weighted by train MAE") {
        EnsembleOptions o;
        o.n_initial = 3;
        o.n_evals = 10;
        o.ensemble_size = 4;
        const auto e = guided_search(train, space, o);
        CHECK(e.members().size() == 4);
        for (std::size_t i = 0; i < e.members().size(); ++i) {
            const auto &m = e.members()[i];
            CHECK(m.weight == member_weight(m.train_mae, 4));
            if (i > 0) {
                CHECK(e.members()[i - 1].train_mae <= m.train_mae);
            }
        }
    }
    SECTION("exhaustive search keeps the brute-force best set") {
        const auto all = space.enumerate(train.length());
        EnsembleOptions o;
        o.n_initial = 5;
        o.n_evals = all.size() + 5;
        o.ensemble_size = 6;
        const auto e = guided_search(train, space, o);
        CHECK(e.history().size() == all.size());
        std::vector<std::pair<double, std::size_t>> scored;
        for (std::size_t i = 0; i < all.size(); ++i) {
            scored.emplace_back(loo_mae(train, all[i], o.subsample_fraction, o.seed), i);
        }
        std::sort(scored.begin(), scored.end());
        for (std::size_t r = 0; r < 6; ++r) {
            CHECK(e.members()[r].model.params() == all[scored[r].second]);
            CHECK(e.members()[r].train_mae == scored[r].first);
        }
    }
    SECTION("invalid options") {
        EnsembleOptions o;
        o.n_initial = 5;
        o.n_evals = 4;
        CHECK(error_kind([&] { (void)guided_search(train, space, o); }) == ErrorKind::InvalidArgument);
        o.n_initial = 1;
        o.ensemble_size = 0;
        CHECK(error_kind([&] { (void)guided_search(train, space, o); }) == ErrorKind::InvalidArgument);
        ParameterSpace empty = space;
        empty.window_lengths = {64};
        CHECK(error_kind([&] { (void)guided_search(train, empty, {}); }) == ErrorKind::OutOfSpace);
    }
}

TEST_CASE("ensemble prediction", "[ensemble]") {
    const auto train = read_dataset(testing::fixture("ordinal4_TRAIN.ts"));
    const auto test = read_dataset(testing::fixture("ordinal4_TEST.ts"));
    EnsembleOptions o;
    o.n_initial = 3;
    o.n_evals = 8;
    o.ensemble_size = 5;
    const auto e = guided_search(train, small_space(), o);
    const auto predicted = e.predict_dataset(test);
    REQUIRE(predicted.size() == test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        std::vector<int> votes;
        std::vector<double> weights;
        for (const auto &m : e.members()) {
            votes.push_back(m.model.predict_one(test.series()[i]));
            weights.push_back(m.weight);
        }
        CHECK(predicted[i] == combine_votes(votes, weights, 4, VoteMode::Ordinal));
        CHECK(e.with_mode(VoteMode::Nominal).predict(test.series()[i]) ==
              combine_votes(votes, weights, 4, VoteMode::Nominal));
    }
    const std::vector<std::size_t> reversed_idx{3, 2, 1, 0};
    const auto sub = e.predict_dataset(test.subset(reversed_idx));
    const std::vector<int> expected{predicted[3], predicted[2], predicted[1], predicted[0]};
    CHECK(sub == expected);

    const auto long_series = oracle::sinusoid_dataset(2, 2, 40, 0.1, 1);
    CHECK(error_kind([&] { (void)e.predict_dataset(long_series); }) == ErrorKind::ShapeMismatch);
    std::vector<Series> two_dims{Series(2, 32, std::vector<double>(64, 0.0)), Series(2, 32, std::vector<double>(64, 0.0))};
    CHECK(error_kind([&] { (void)e.predict_dataset(TimeSeriesDataset("x", two_dims, {0, 1}, 2)); }) ==
          ErrorKind::ShapeMismatch);
}

TEST_CASE("guidance beats random selection where short windows are best", "[ensemble][property]") {
    // short high-frequency bursts at a class-dependent position: only small windows resolve them
    auto make = [](std::uint64_t seed) {
        std::mt19937_64 gen(seed);
        std::normal_distribution<double> noise(0.0, 0.3);
        std::vector<Series> series;
        std::vector<int> labels;
        for (int k = 0; k < 3; ++k) {
            for (int i = 0; i < 10; ++i) {
                std::vector<double> x(96);
                for (double &v : x) {
                    v = noise(gen);
                }
                const std::size_t start = 8 + static_cast<std::size_t>(gen() % 70);
                for (std::size_t t = 0; t < 10; ++t) {
                    x[start + t] += std::sin(2 * std::numbers::pi * (1.0 + k) * static_cast<double>(t) / 10.0) * 2.0;
                }
                series.emplace_back(std::move(x));
                labels.push_back(k);
            }
        }
        return TimeSeriesDataset("bursts", std::move(series), std::move(labels), 3);
    };
    const auto train = make(99);
    const auto space = ParameterSpace::defaults(train.length());
    double guided_total = 0, random_total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        EnsembleOptions g;
        g.n_initial = 5;
        g.n_evals = 15;
        g.ensemble_size = 5;
        g.seed = seed;
        auto r = g;
        r.n_initial = r.n_evals;
        for (const auto &m : guided_search(train, space, g).members()) {
            guided_total += m.train_mae;
        }
        for (const auto &m : guided_search(train, space, r).members()) {
            random_total += m.train_mae;
        }
    }
    CHECK(guided_total <= random_total);
}
