#include "otde/benchmark.hpp"
#include "otde/cdd.hpp"
#include "otde/metrics.hpp"
#include "otde/serialization.hpp"
#include "otde/stats.hpp"
#include "otde/ts_format.hpp"

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace otde;
using testing::error_kind;

namespace {

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RankTable three_methods() {
    return rank_grid({"a", "b", "c"}, {"d1", "d2", "d3"}, {{0.1, 0.2, 0.3}, {0.1, 0.3, 0.2}, {0.2, 0.1, 0.3}}, true);
}

} // namespace

TEST_CASE("Wilcoxon examples", "[evaluation][wilcoxon]") {
    const std::vector<double> a{1, 2, 3, 4, 5};
    const auto same = wilcoxon_signed_rank(a, a);
    CHECK(same.degenerate);
    CHECK(same.p_value == 1.0);
    CHECK(same.n == 0);

    const std::vector<double> zero(5, 0.0);
    const auto r = wilcoxon_signed_rank(a, zero);
    CHECK(r.exact);
    CHECK(r.n == 5);
    CHECK(r.w_plus == 15.0);
    CHECK(r.p_value == Catch::Approx(0.0625).margin(1e-12));
    CHECK(wilcoxon_signed_rank(zero, a).p_value == Catch::Approx(0.0625).margin(1e-12));

    CHECK(error_kind([&] { (void)wilcoxon_signed_rank(a, std::vector<double>{1.0}); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("Wilcoxon matches enumeration and the normal approximation is close", "[evaluation][wilcoxon][property]") {
    std::mt19937_64 gen(4);
    std::uniform_int_distribution<int> small(-4, 4);
    std::normal_distribution<double> normal(0.2, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(gen() % 10);
        std::vector<double> x(n), y(n, 0.0);
        for (double &v : x) {
            // integer differences give ties and zeros
            v = trial % 2 ? small(gen) : normal(gen);
        }
        const auto r = wilcoxon_signed_rank(x, y, WilcoxonMethod::Exact);
        CHECK(r.p_value == Catch::Approx(oracle::wilcoxon_enumerated(x, y)).margin(1e-12));
        CHECK(r.p_value >= 0.0);
        CHECK(r.p_value <= 1.0);
        const auto swapped = wilcoxon_signed_rank(y, x, WilcoxonMethod::Exact);
        CHECK(swapped.p_value == Catch::Approx(r.p_value).margin(1e-12));
    }
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> x(15), y(15, 0.0);
        for (double &v : x) {
            v = normal(gen);
        }
        const auto r = wilcoxon_signed_rank(x, y);
        CHECK_FALSE(r.exact);
        CHECK(std::abs(r.p_value - oracle::wilcoxon_enumerated(x, y)) <= 0.02);
    }
}

TEST_CASE("Holm adjustment", "[evaluation]") {
    const std::vector<double> p{0.01, 0.04, 0.03};
    const auto adj = holm_adjust(p);
    CHECK(adj[0] == Catch::Approx(0.03));
    CHECK(adj[1] == Catch::Approx(0.06));
    CHECK(adj[2] == Catch::Approx(0.06));
    CHECK(holm_adjust(std::vector<double>{0.6, 0.9}) == std::vector<double>{1.0, 1.0});
    CHECK(holm_adjust(std::vector<double>{}).empty());
    CHECK(error_kind([] { (void)holm_adjust(std::vector<double>{1.5}); }) == ErrorKind::InvalidArgument);

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> raw(1 + gen() % 10);
        for (double &v : raw) {
            v = u(gen);
        }
        const auto a = holm_adjust(raw);
        std::vector<std::size_t> idx(raw.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto i, auto j) { return raw[i] < raw[j]; });
        for (std::size_t k = 0; k < raw.size(); ++k) {
            CHECK(a[idx[k]] >= raw[idx[k]]);
            CHECK(a[idx[k]] <= 1.0);
            if (k > 0) {
                CHECK(a[idx[k]] >= a[idx[k - 1]]);
            }
        }
    }
}

TEST_CASE("ranking", "[evaluation][ranks]") {
    const std::vector<double> v{0.3, 0.1, 0.3, 0.2};
    CHECK(rank_values(v, true) == std::vector<double>{3.5, 1, 3.5, 2});
    CHECK(rank_values(v, true, TieMethod::Min) == std::vector<double>{3, 1, 3, 2});
    CHECK(rank_values(v, false) == std::vector<double>{1.5, 4, 1.5, 3});

    const auto twins = rank_grid({"x", "y"}, {"d1", "d2"}, {{0.5, 0.5}, {0.2, 0.2}}, true);
    CHECK(twins.average_ranks == std::vector<double>{1.5, 1.5});

    const auto t = three_methods();
    CHECK(t.average_ranks[0] == Catch::Approx(4.0 / 3));
    CHECK(t.average_ranks[1] == Catch::Approx(2.0));
    CHECK(t.average_ranks[2] == Catch::Approx(8.0 / 3));
    CHECK(t.order() == std::vector<std::size_t>{0, 1, 2});

    CHECK(error_kind([] { (void)rank_grid({"a", "b"}, {"d"}, {{0.1, std::nan("")}}, true); }) ==
          ErrorKind::IncompleteGrid);
    CHECK(error_kind([] { (void)rank_grid({"a", "b"}, {"d"}, {{0.1}}, true); }) == ErrorKind::IncompleteGrid);
    CHECK(error_kind([] { (void)rank_grid({"a", "b"}, {"d", "e"}, {{0.1, 0.2}}, true); }) ==
          ErrorKind::IncompleteGrid);
}

TEST_CASE("ranks are invariant under strictly increasing transforms", "[evaluation][ranks][property]") {
    std::mt19937_64 gen(6);
    std::uniform_int_distribution<int> level(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(2 + gen() % 8);
        for (double &x : v) {
            x = level(gen) / 6.0;
        }
        std::vector<double> w;
        for (double x : v) {
            w.push_back(std::exp(3 * x) + 7);
        }
        for (auto ties : {TieMethod::Average, TieMethod::Min}) {
            const auto r = rank_values(v, true, ties);
            CHECK(r == rank_values(w, true, ties));
            double sum = 0;
            for (double x : r) {
                sum += x;
            }
            if (ties == TieMethod::Average) {
                CHECK(sum == Catch::Approx(v.size() * (v.size() + 1) / 2.0));
            }
        }
    }
}

TEST_CASE("cliques", "[evaluation][cliques]") {
    const auto t = three_methods();
    const std::vector<std::vector<double>> all_sig{{1, 0.01, 0.01}, {0.01, 1, 0.01}, {0.01, 0.01, 1}};
    CHECK(form_cliques(t, all_sig, 0.1) == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    const std::vector<std::vector<double>> none{{1, 0.5, 0.5}, {0.5, 1, 0.5}, {0.5, 0.5, 1}};
    CHECK(form_cliques(t, none, 0.1) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    const std::vector<std::vector<double>> ends{{1, 0.5, 0.01}, {0.5, 1, 0.5}, {0.01, 0.5, 1}};
    CHECK(form_cliques(t, ends, 0.1) == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});

    const auto tests = pairwise_wilcoxon(t);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(tests.adjusted_p[i][j] == tests.adjusted_p[j][i]);
            CHECK(tests.adjusted_p[i][j] >= tests.raw_p[i][j]);
        }
    }
}

TEST_CASE("critical difference output", "[evaluation][cdd]") {
    const auto t = three_methods();
    const std::vector<std::vector<std::size_t>> cliques{{0, 1}, {1, 2}};
    const auto data = make_cdd_data(t, cliques);
    CHECK(data.methods == std::vector<std::string>{"a", "b", "c"});
    CHECK(data.cliques[1] == std::vector<std::string>{"b", "c"});
    CHECK(render_cdd_svg(data, "mae") == render_cdd_svg(data, "mae"));
    CHECK(render_cdd_svg(data, "").find("<svg") == 0);
    CHECK(parse_cdd_tsv(cdd_tsv(data)) == data);

    CddData alone = data;
    alone.cliques.clear();
    CHECK(parse_cdd_tsv(cdd_tsv(alone)) == alone);
    CHECK(render_cdd_svg(alone, "x").find("stroke-width=\"4\"") == std::string::npos);
    CHECK(render_cdd_svg(data, "x").find("stroke-width=\"4\"") != std::string::npos);
    CHECK(error_kind([] { (void)parse_cdd_tsv("rank\tonly-two\n"); }) == ErrorKind::MalformedDataset);

    const auto dir = testing::scratch_dir("cdd");
    emit_cdd(t, cliques, dir / "plot.svg", "mae");
    const auto first = slurp(dir / "plot.svg");
    emit_cdd(t, cliques, dir / "plot.svg", "mae");
    CHECK(slurp(dir / "plot.svg") == first);
    CHECK(parse_cdd_tsv(slurp(dir / "plot.tsv")) == data);
    CHECK(error_kind([&] { emit_cdd(t, cliques, dir / "missing" / "plot.svg"); }) == ErrorKind::IoError);
}

TEST_CASE("benchmark driver", "[evaluation][benchmark]") {
    EnsembleOptions base;
    base.n_initial = 3;
    base.n_evals = 5;
    base.ensemble_size = 3;
    auto ordinal = *builtin_method("ordinal", base);
    auto nominal = *builtin_method("nominal", base);
    CHECK(ordinal.options.mode == VoteMode::Ordinal);
    CHECK(nominal.options.mode == VoteMode::Nominal);
    CHECK_FALSE(builtin_method("boss"));

    const auto splits = load_dataset_dir(testing::fixture("bench"));
    REQUIRE(splits.size() == 2);
    CHECK(splits[0].name == "ordinal4");
    CHECK(splits[1].name == "wave3");

    const auto records = run_benchmark({ordinal}, {splits[0], splits[1]}, 3);
    REQUIRE(records.size() == 6);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].dataset == splits[i / 3].name);
        CHECK(records[i].resample_seed == static_cast<int>(i % 3));
        CHECK_FALSE(records[i].failed);
    }

    // resample 0 is the original split with the unshifted search seed
    const auto direct = guided_search(splits[0].train, ParameterSpace::defaults(splits[0].train.length()), ordinal.options);
    const auto pred = direct.predict_dataset(splits[0].test);
    CHECK(records[0].mae == mae(splits[0].test.labels(), pred));
    CHECK(records[0].ccr == ccr(splits[0].test.labels(), pred));

    const auto s = summarize(records, "ordinal", "wave3", Metric::MAE);
    REQUIRE(s);
    CHECK(s->runs == 3);
    const double mean = (records[3].mae + records[4].mae + records[5].mae) / 3;
    CHECK(s->mean == Catch::Approx(mean));
    double ss = 0;
    for (int i = 3; i < 6; ++i) {
        ss += (records[i].mae - mean) * (records[i].mae - mean);
    }
    CHECK(s->sd == Catch::Approx(std::sqrt(ss / 2)).margin(1e-12));
    CHECK_FALSE(summarize(records, "nominal", "wave3", Metric::MAE));

    const auto threaded = run_benchmark({ordinal}, {splits[0], splits[1]}, 3, 2);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(threaded[i].mae == records[i].mae);
        CHECK(threaded[i].dataset == records[i].dataset);
    }
    CHECK(error_kind([&] { (void)run_benchmark({ordinal}, splits, 0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("reports", "[evaluation][benchmark]") {
    std::vector<RunRecord> rs;
    const std::vector<int> y{0, 1, 2, 2};
    rs.push_back(score_run("m1", "d1", 0, y, std::vector<int>{0, 1, 2, 1}, 3));
    rs.push_back(score_run("m2", "d1", 0, y, std::vector<int>{0, 0, 0, 0}, 3));
    rs.push_back(score_run("m1", "d2", 0, y, std::vector<int>{0, 1, 2, 2}, 3));
    rs.push_back(score_run("m2", "d2", 0, y, std::vector<int>{1, 1, 2, 2}, 3));
    RunRecord failed;
    failed.method = "m2";
    failed.dataset = "d3";
    failed.failed = true;
    failed.error = "boom";
    rs.push_back(failed);
    rs.push_back(score_run("m1", "d3", 0, y, y, 3));

    CHECK(rs[0].mae == 0.25);
    CHECK(rs[1].ccr == 0.25);
    CHECK(rs[2].qwk == 1.0);

    const auto table = average_ranks(rs, Metric::MAE);
    CHECK(table.datasets == std::vector<std::string>{"d1", "d2"});
    CHECK(table.average_ranks == std::vector<double>{1.0, 2.0});
    const auto qwk_table = average_ranks(rs, Metric::QWK);
    CHECK(qwk_table.average_ranks == std::vector<double>{1.0, 2.0});

    const auto dir = testing::scratch_dir("report");
    write_report(dir / "r.json", rs, {{"note", "x"}});
    const auto back = read_report(dir / "r.json");
    REQUIRE(back.size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(back[i].method == rs[i].method);
        CHECK(back[i].mae == rs[i].mae);
        CHECK(back[i].qwk == rs[i].qwk);
        CHECK(back[i].failed == rs[i].failed);
        CHECK(back[i].error == rs[i].error);
    }
    write_rank_tsv(dir / "ranks.tsv", table);
    CHECK(slurp(dir / "ranks.tsv") == "dataset\tm1\tm2\nd1\t1.000\t2.000\nd2\t1.000\t2.000\naverage_rank\t1.000000\t2.000000\n");
    CHECK(error_kind([&] { write_report(dir / "no" / "r.json", rs); }) == ErrorKind::IoError);
    CHECK(error_kind([&] { (void)read_report(dir / "absent.json"); }) == ErrorKind::IoError);

    std::vector<RunRecord> only_failed{failed};
    CHECK(error_kind([&] { (void)average_ranks(only_failed, Metric::MAE); }) == ErrorKind::IncompleteGrid);
}

TEST_CASE("ensemble persistence", "[evaluation][serialization]") {
    const auto train = read_dataset(testing::fixture("ordinal4_TRAIN.ts"));
    const auto test = read_dataset(testing::fixture("ordinal4_TEST.ts"));
    EnsembleOptions o;
    o.n_initial = 3;
    o.n_evals = 6;
    o.ensemble_size = 3;
    const auto e = guided_search(train, ParameterSpace::defaults(train.length()), o);
    const auto dir = testing::scratch_dir("persist");
    save_ensemble(e, dir / "model.json");
    const auto back = load_ensemble(dir / "model.json");
    CHECK(back == e);
    CHECK(back.predict_dataset(test) == e.predict_dataset(test));
    CHECK(back.with_mode(VoteMode::Nominal).predict_dataset(test) ==
          e.with_mode(VoteMode::Nominal).predict_dataset(test));

    CHECK(parse_vote_mode(to_string(VoteMode::Nominal)) == VoteMode::Nominal);
    CHECK(parse_distance(to_string(HistogramDistance::SquaredDifference)) == HistogramDistance::SquaredDifference);
    CHECK(error_kind([&] { (void)load_ensemble(dir / "absent.json"); }) == ErrorKind::IoError);
    {
        std::ofstream bad(dir / "bad.json");
        bad << "{\"format\": \"something-else\"}";
    }
    CHECK(error_kind([&] { (void)load_ensemble(dir / "bad.json"); }).has_value());
}
