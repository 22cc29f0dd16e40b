#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "axi/data_io.hpp"
#include "axi/errors.hpp"
#include "axi/index_engine.hpp"
#include "oracles.hpp"

using namespace axi;
using namespace axi::data_io;

TEST_CASE("parse_transactions") {
    SUBCASE("one valid row") {
        std::istringstream in("trade_date,maturity_years,volume_usd,spread_pct,scope\n"
                              "2023-05-01,0.5,1000000,0.42,bank\n");
        const auto result = parse_transactions(in, "test");
        REQUIRE(result.transactions.size() == 1);
        const auto& tx = result.transactions[0];
        CHECK(tx.trade_date == Date{2023, 5, 1});
        CHECK(tx.maturity == 0.5);
        CHECK(tx.volume == 1000000.0);
        CHECK(tx.spread == 0.42);
        CHECK(tx.scope == Scope::bank);
        CHECK(result.warnings.empty());
    }
    SUBCASE("negative volume names the row") {
        std::istringstream in("trade_date,maturity_years,volume_usd,spread_pct,scope\n"
                              "2023-05-01,0.5,100,0.42,bank\n"
                              "2023-05-02,0.5,-100,0.42,bank\n");
        try {
            parse_transactions(in, "test");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
            CHECK(std::string(e.what()).find("column 3") != std::string::npos);
        }
    }
    SUBCASE("empty body warns") {
        std::istringstream in("trade_date,maturity_years,volume_usd,spread_pct,scope\n");
        const auto result = parse_transactions(in, "test");
        CHECK(result.transactions.empty());
        REQUIRE(result.warnings.size() == 1);
    }
    SUBCASE("unknown scope tag") {
        std::istringstream in("trade_date,maturity_years,volume_usd,spread_pct,scope\n"
                              "2023-05-01,0.5,100,0.42,hedge_fund\n");
        CHECK_THROWS_AS(parse_transactions(in, "test"), ValidationError);
    }
    SUBCASE("malformed number cites line and column") {
        std::istringstream in("trade_date,maturity_years,volume_usd,spread_pct,scope\n"
                              "2023-05-01,0.5,100,abc,bank\n");
        try {
            parse_transactions(in, "test");
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("column 4") != std::string::npos);
        }
    }
    SUBCASE("missing header") {
        std::istringstream in("2023-05-01,0.5,100,0.42,bank\n");
        CHECK_THROWS_AS(parse_transactions(in, "test"), ValidationError);
    }
    SUBCASE("comment lines and blank lines are skipped") {
        std::istringstream in("# generator=axi-synth/1\n\n"
                              "trade_date,maturity_years,volume_usd,spread_pct,scope\n"
                              "2023-05-01,0.5,100,0.42,nonbank\n");
        CHECK(parse_transactions(in, "test").transactions.size() == 1);
    }
    SUBCASE("a UTF-8 byte-order mark does not break the header check") {
        std::istringstream in("\xEF\xBB\xBF"
                              "trade_date,maturity_years,volume_usd,spread_pct,scope\n"
                              "2023-05-01,0.5,100,0.42,bank\n");
        CHECK(parse_transactions(in, "test").transactions.size() == 1);
    }
}

TEST_CASE("transaction round trip is exact") {
    SyntheticConfig config;
    config.seed = 5;
    config.start = Date{2023, 3, 1};
    config.end = Date{2023, 3, 31};
    const auto txs = generate_synthetic(config);
    REQUIRE(!txs.empty());

    std::ostringstream out;
    write_transactions(out, txs, config.describe());
    std::istringstream in(out.str());
    const auto parsed = parse_transactions(in, "roundtrip");
    REQUIRE(parsed.transactions.size() == txs.size());
    for (std::size_t i = 0; i < txs.size(); ++i) {
        CHECK(parsed.transactions[i].trade_date == txs[i].trade_date);
        CHECK(parsed.transactions[i].maturity == txs[i].maturity);
        CHECK(parsed.transactions[i].volume == txs[i].volume);
        CHECK(parsed.transactions[i].spread == txs[i].spread);
        CHECK(parsed.transactions[i].scope == txs[i].scope);
    }
}

TEST_CASE("parse_series") {
    SUBCASE("two rows in order with kind header") {
        std::istringstream in("# kind: overnight\ndate,value_pct\n2023-05-01,5.1\n2023-05-02,5.2\n");
        const auto result = parse_series(in, "test");
        CHECK(result.series.kind() == SeriesKind::overnight);
        REQUIRE(result.series.size() == 2);
        CHECK(result.series.points()[0].value == 5.1);
        CHECK(result.warnings.empty());
    }
    SUBCASE("unsorted input is sorted silently") {
        std::istringstream in("# kind: index\ndate,value_pct\n2023-05-02,5.2\n2023-05-01,5.1\n");
        const auto result = parse_series(in, "test");
        CHECK(result.series.points()[0].date == Date{2023, 5, 1});
    }
    SUBCASE("duplicate dates are rejected") {
        std::istringstream in("# kind: index\ndate,value_pct\n2023-05-01,5.2\n2023-05-01,5.1\n");
        CHECK_THROWS_AS(parse_series(in, "test"), ValidationError);
    }
    SUBCASE("missing kind defaults to composite with a warning") {
        std::istringstream in("date,value_pct\n2023-05-01,5.1\n");
        const auto result = parse_series(in, "test");
        CHECK(result.series.kind() == SeriesKind::composite);
        REQUIRE(result.warnings.size() == 1);
    }
    SUBCASE("unknown kind is rejected") {
        std::istringstream in("# kind: quarterly\ndate,value_pct\n2023-05-01,5.1\n");
        CHECK_THROWS_AS(parse_series(in, "test"), ValidationError);
    }
}

TEST_CASE("series round trip preserves points, kind and name") {
    Series s("AXI", SeriesKind::index);
    oracles::TestRng rng(6);
    Date d{2023, 1, 2};
    for (int i = 0; i < 50; ++i) {
        s.append(d, rng.uniform(-1.0, 3.0));
        d += 1 + static_cast<int>(rng.uniform() * 3);
    }
    std::ostringstream out;
    write_series(out, s);
    std::istringstream in(out.str());
    const auto parsed = parse_series(in, "roundtrip");
    CHECK(parsed.series.kind() == SeriesKind::index);
    CHECK(parsed.series.name() == "AXI");
    REQUIRE(parsed.series.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(parsed.series.points()[i].date == s.points()[i].date);
        CHECK(parsed.series.points()[i].value == s.points()[i].value);
    }
}

TEST_CASE("parse_curve") {
    std::istringstream in("# term structure\ntenor_years,rate_pct\n1.0,4.5\n0.25,4.0\n5.0,5.5\n");
    const auto curve = parse_curve(in, "test");
    CHECK(curve.rate_at(0.25) == 4.0);
    CHECK(curve.rate_at(0.625) == doctest::Approx(4.25));

    std::istringstream bad("tenor,rate\n1.0,4.5\n");
    CHECK_THROWS_AS(parse_curve(bad, "test"), ValidationError);
    std::istringstream dup("tenor_years,rate_pct\n1.0,4.5\n1.0,4.0\n");
    CHECK_THROWS_AS(parse_curve(dup, "test"), ValidationError);
}

TEST_CASE("decomposition round trip") {
    SyntheticConfig config;
    config.seed = 14;
    config.start = Date{2023, 5, 1};
    config.end = Date{2023, 5, 31};
    config.trades_per_day[3] = 0; // leave LT3 empty to exercise blank fields
    const auto run =
        index_engine::compute_index(generate_synthetic(config), index_engine::IndexScope::axi, 21);

    std::ostringstream out;
    write_decompositions(out, run.decompositions);
    std::istringstream in(out.str());
    const auto parsed = parse_decompositions(in, "roundtrip");
    REQUIRE(parsed.size() == run.decompositions.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const auto& a = parsed[i];
        const auto& b = run.decompositions[i];
        CHECK(a.date == b.date);
        CHECK(a.daily_spread == b.daily_spread);
        CHECK(a.st_weight == b.st_weight);
        CHECK((std::isnan(a.lt_spreads[3]) == std::isnan(b.lt_spreads[3])));
        CHECK(std::isnan(a.lt_spreads[2])); // LT3 bucket left empty above
        CHECK(a.lt_volumes[1] == b.lt_volumes[1]);
        CHECK(a.weighted_avg_maturity == b.weighted_avg_maturity);
    }
}

TEST_CASE("generate_synthetic determinism") {
    SyntheticConfig config;
    config.seed = 42;
    config.start = Date{2023, 1, 1};
    config.end = Date{2023, 2, 28};
    config.stress_windows.push_back({Date{2023, 2, 1}, Date{2023, 2, 14}, 4.0, 0.8});

    std::ostringstream first, second;
    write_transactions(first, generate_synthetic(config), config.describe());
    write_transactions(second, generate_synthetic(config), config.describe());
    CHECK(first.str() == second.str());

    SyntheticConfig other = config;
    other.seed = 43;
    std::ostringstream third;
    write_transactions(third, generate_synthetic(other), other.describe());
    CHECK(first.str() != third.str());
}

TEST_CASE("stress windows scale LT spreads and ST volumes") {
    SyntheticConfig config;
    config.seed = 9;
    config.start = Date{2020, 1, 1};
    config.end = Date{2020, 6, 30};
    for (int b = 1; b < 5; ++b)
        config.calm_spread[b] = 0.4;
    const Date stress_start{2020, 3, 2};
    const Date stress_end{2020, 4, 30};
    config.stress_windows.push_back({stress_start, stress_end, 8.0, 0.75});

    const auto txs = generate_synthetic(config);
    const auto run = index_engine::compute_index(txs, index_engine::IndexScope::fxi, 21);

    double calm_lt = 0.0, stress_lt = 0.0, calm_st_vol = 0.0, stress_st_vol = 0.0;
    int calm_days = 0, stress_days = 0;
    for (const auto& day : run.decompositions) {
        const bool in_stress = stress_start <= day.date && day.date <= stress_end;
        (in_stress ? stress_lt : calm_lt) += day.lt_spread_combined();
        (in_stress ? stress_st_vol : calm_st_vol) += day.st_volume;
        (in_stress ? stress_days : calm_days) += 1;
    }
    calm_lt /= calm_days;
    stress_lt /= stress_days;
    calm_st_vol /= calm_days;
    stress_st_vol /= stress_days;

    // Multiplier 8 on a 0.4% base puts stressed LT medians near 3.2%.
    CHECK(stress_lt == doctest::Approx(3.2).epsilon(0.15));
    CHECK(calm_lt == doctest::Approx(0.4).epsilon(0.25));
    CHECK(stress_st_vol < calm_st_vol);

    // Weighted average maturity lengthens under stress (ST volume share drops).
    double calm_wam = 0.0, stress_wam = 0.0;
    for (const auto& day : run.decompositions) {
        const bool in_stress = stress_start <= day.date && day.date <= stress_end;
        (in_stress ? stress_wam : calm_wam) += day.weighted_avg_maturity;
    }
    CHECK(stress_wam / stress_days > calm_wam / calm_days);

    // Regime separation holds on every seed in the matrix.
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL, 5ULL}) {
        SyntheticConfig c = config;
        c.seed = seed;
        const auto run_i =
            index_engine::compute_index(generate_synthetic(c), index_engine::IndexScope::fxi, 21);
        double calm = 0.0, stress = 0.0;
        int nc = 0, ns = 0;
        for (const auto& day : run_i.decompositions) {
            const bool in_stress = stress_start <= day.date && day.date <= stress_end;
            (in_stress ? stress : calm) += day.lt_spread_combined();
            (in_stress ? ns : nc) += 1;
        }
        CHECK(stress / ns > calm / nc);
    }
}

TEST_CASE("default calm configuration tracks the published index level") {
    SyntheticConfig config;
    config.seed = 2024;
    config.start = Date{2023, 1, 1};
    config.end = Date{2023, 12, 31};
    const auto txs = generate_synthetic(config);
    const auto run = index_engine::compute_index(txs, index_engine::IndexScope::axi, 21);
    REQUIRE(!run.index.empty());
    CHECK(run.index.mean() == doctest::Approx(0.5165).epsilon(0.10));
}

TEST_CASE("synthetic config validation and file round trip") {
    SUBCASE("empty span") {
        SyntheticConfig config;
        config.start = Date{2023, 2, 1};
        config.end = Date{2023, 1, 1};
        CHECK_THROWS_AS(generate_synthetic(config), ValidationError);
    }
    SUBCASE("stress window outside the span") {
        SyntheticConfig config;
        config.stress_windows.push_back({Date{2010, 1, 1}, Date{2010, 2, 1}, 2.0, 1.0});
        CHECK_THROWS_AS(generate_synthetic(config), ValidationError);
    }
    SUBCASE("nonpositive multiplier") {
        SyntheticConfig config;
        config.stress_windows.push_back({config.start, config.end, 0.0, 1.0});
        CHECK_THROWS_AS(generate_synthetic(config), ValidationError);
    }
    SUBCASE("config file round trip") {
        SyntheticConfig config;
        config.seed = 77;
        config.start = Date{2021, 1, 1};
        config.end = Date{2021, 6, 30};
        config.volume_scale[0] = 4.2e11;
        config.trades_per_day[2] = 9;
        config.bank_share = 0.5;
        config.stress_windows.push_back({Date{2021, 3, 1}, Date{2021, 3, 31}, 6.0, 0.9});

        const auto path = std::filesystem::temp_directory_path() / "axilab_synth_test.cfg";
        {
            std::ofstream out(path);
            for (const auto& line : config.describe())
                if (line.rfind("generator=", 0) != 0)
                    out << line << "\n";
        }
        const SyntheticConfig loaded = load_synthetic_config(path);
        std::filesystem::remove(path);

        CHECK(loaded.seed == 77);
        CHECK(loaded.start == config.start);
        CHECK(loaded.volume_scale[0] == config.volume_scale[0]);
        CHECK(loaded.trades_per_day[2] == 9);
        CHECK(loaded.bank_share == 0.5);
        REQUIRE(loaded.stress_windows.size() == 1);
        CHECK(loaded.stress_windows[0].lt_spread_multiplier == 6.0);

        std::ostringstream a, b;
        write_transactions(a, generate_synthetic(config), {});
        write_transactions(b, generate_synthetic(loaded), {});
        CHECK(a.str() == b.str());
    }
    SUBCASE("unknown key is rejected") {
        const auto path = std::filesystem::temp_directory_path() / "axilab_bad.cfg";
        {
            std::ofstream out(path);
            out << "sead = 5\n";
        }
        CHECK_THROWS_AS(load_synthetic_config(path), ValidationError);
        std::filesystem::remove(path);
    }
}
