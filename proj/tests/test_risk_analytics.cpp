#include <doctest.h>

#include <cmath>

#include "axi/errors.hpp"
#include "axi/risk_analytics.hpp"
#include "oracles.hpp"

using namespace axi;
using namespace axi::risk_analytics;

namespace {

index_engine::DailySpreadDecomposition make_day(Date date, double st_spread, double lt_spread,
                                                double st_weight, double lt_weight,
                                                double st_volume = 100.0,
                                                double lt_volume = 100.0) {
    index_engine::DailySpreadDecomposition d;
    d.date = date;
    d.st_spread = st_spread;
    d.st_weight = st_weight;
    d.st_volume = st_volume;
    d.st_avg_maturity = 0.5;
    d.lt_spreads[0] = lt_spread;
    d.lt_weights[0] = lt_weight;
    d.lt_volumes[0] = lt_volume;
    d.lt_avg_maturities[0] = 2.5;
    d.daily_spread = st_weight * st_spread + lt_weight * lt_spread;
    d.weighted_avg_maturity = 1.5;
    return d;
}

} // namespace

TEST_CASE("risk_adjusted_return closed forms") {
    const RarParams params; // Table-6 calibration defaults

    // Full sensitivity: RAR = s / sigma_delta = 1 / 0.3156.
    CHECK(risk_adjusted_return({1.0, 1.0}, params) ==
          doctest::Approx(3.1685678073510775).epsilon(1e-12));

    // Zero sensitivity: (1 - 0.5141) / sqrt(0.2987^2 + 0.3156^2).
    CHECK(risk_adjusted_return({1.0, 0.0}, params) ==
          doctest::Approx(1.1181938385257824).epsilon(1e-12));

    // Spread equal to the mean index nets zero at c = 0.
    CHECK(risk_adjusted_return({params.mean_index, 0.0}, params) == 0.0);

    RarParams degenerate;
    degenerate.sigma_delta = 0.0;
    CHECK_THROWS_AS(risk_adjusted_return({1.0, 1.0}, degenerate), DomainError);
    CHECK_THROWS_AS(risk_adjusted_return({1.0, 1.5}, params), ValidationError);
}

TEST_CASE("equivalent_spread closed forms") {
    const RarParams params;

    CHECK(equivalent_spread(1.0, 0.0, params) == 1.0);

    // Optimal-sensitivity literature value: about a 48 bp discount.
    const double s07 = equivalent_spread(1.0, 0.70, params);
    CHECK(s07 == doctest::Approx(0.5210816250262389).epsilon(1e-12));
    CHECK((1.0 - s07) * 100.0 == doctest::Approx(47.89183749737611).epsilon(1e-12));

    // Full sensitivity: about a 65 bp discount.
    const double s10 = equivalent_spread(1.0, 1.0, params);
    CHECK((1.0 - s10) * 100.0 == doctest::Approx(64.70980245612631).epsilon(1e-12));
}

TEST_CASE("RAR fixed point under the equivalent spread") {
    oracles::TestRng rng(55);
    for (int trial = 0; trial < 2000; ++trial) {
        RarParams params;
        params.mean_index = rng.uniform(0.0, 2.0);
        params.sigma_index = rng.uniform(0.01, 1.0);
        params.sigma_delta = rng.uniform(0.01, 1.0);
        const double s = rng.uniform(-1.0, 3.0);
        const double c = rng.uniform(0.0, 1.0);

        const double s_prime = equivalent_spread(s, c, params);
        const double rar_equivalent = risk_adjusted_return({s_prime, c}, params);
        const double rar_base = risk_adjusted_return({s, 0.0}, params);
        CHECK(rar_equivalent == doctest::Approx(rar_base).epsilon(1e-12));
    }
}

TEST_CASE("volatility ratio bound and discount monotonicity") {
    oracles::TestRng rng(56);
    for (int trial = 0; trial < 500; ++trial) {
        RarParams params;
        params.mean_index = rng.uniform(0.0, 2.0);
        params.sigma_index = rng.uniform(0.01, 1.0);
        params.sigma_delta = rng.uniform(0.01, 1.0);
        const double c = rng.uniform(0.0, 1.0);

        const double cm1 = c - 1.0;
        const double ratio =
            std::sqrt(cm1 * cm1 * params.sigma_index * params.sigma_index +
                      params.sigma_delta * params.sigma_delta) /
            std::sqrt(params.sigma_index * params.sigma_index +
                      params.sigma_delta * params.sigma_delta);
        CHECK(ratio > 0.0);
        CHECK(ratio <= 1.0);
        if (c == 0.0)
            CHECK(ratio == 1.0);

        // For s >= mean the discount never decreases in c.
        const double s = params.mean_index + rng.uniform(0.0, 2.0);
        double last_discount = -INFINITY;
        double last_rar = -INFINITY;
        for (double grid_c : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0}) {
            const double discount = s - equivalent_spread(s, grid_c, params);
            CHECK(discount >= last_discount - 1e-12);
            last_discount = discount;
            const double rar = risk_adjusted_return({s, grid_c}, params);
            CHECK(rar >= last_rar - 1e-12);
            last_rar = rar;
        }
    }
}

TEST_CASE("discount_curve") {
    const RarParams params;
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i)
        grid.push_back(i / 100.0);
    const auto curve = discount_curve(1.0, params, grid);
    REQUIRE(curve.size() == 101);

    CHECK(curve.front().sensitivity == 0.0);
    CHECK(curve.front().discount_bp == 0.0);
    for (std::size_t i = 1; i < curve.size(); ++i)
        CHECK(curve[i].discount_bp >= curve[i - 1].discount_bp - 1e-12);

    CHECK(curve[70].discount_bp == doctest::Approx(47.89183749737611).epsilon(1e-12));
    CHECK(curve[100].discount_bp == doctest::Approx(64.70980245612631).epsilon(1e-12));
}

TEST_CASE("sigma_delta_estimate") {
    const Date base{2023, 1, 2};
    SUBCASE("LT equal to ST estimates zero") {
        std::vector<index_engine::DailySpreadDecomposition> days;
        for (int i = 0; i < 10; ++i)
            days.push_back(make_day(base + i, 0.8, 0.8, 0.4, 0.6));
        CHECK(sigma_delta_estimate(days) == 0.0);
    }
    SUBCASE("half/half weights with a 1% gap estimate 0.5%") {
        std::vector<index_engine::DailySpreadDecomposition> days;
        for (int i = 0; i < 10; ++i)
            days.push_back(make_day(base + i, 0.1, 1.1, 0.5, 0.5));
        CHECK(sigma_delta_estimate(days) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("raw-volume mode uses dollar shares") {
        std::vector<index_engine::DailySpreadDecomposition> days{
            make_day(base, 0.1, 1.1, 0.5, 0.5, /*st_volume=*/300.0, /*lt_volume=*/100.0),
        };
        const double expected = std::sqrt(0.25 * 0.75) * 1.0;
        CHECK(sigma_delta_estimate(days, DeltaWeightMode::raw_volume) ==
              doctest::Approx(expected).epsilon(1e-14));
        CHECK(sigma_delta_estimate(days) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("days with one segment only are skipped") {
        std::vector<index_engine::DailySpreadDecomposition> days;
        auto st_only = make_day(base, 0.1, 0.0, 1.0, 0.0, 100.0, 0.0);
        st_only.lt_spreads[0] = std::nan("");
        days.push_back(st_only);
        CHECK_THROWS_AS(sigma_delta_estimate(days), NoDataError);
        days.push_back(make_day(base + 1, 0.1, 1.1, 0.5, 0.5));
        CHECK(sigma_delta_estimate(days) == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("estimator is nonnegative on random inputs") {
        oracles::TestRng rng(60);
        std::vector<index_engine::DailySpreadDecomposition> days;
        for (int i = 0; i < 100; ++i) {
            const double w = rng.uniform(0.05, 0.95);
            days.push_back(
                make_day(base + i, rng.uniform(-0.5, 2.0), rng.uniform(-0.5, 2.0), 1.0 - w, w));
        }
        CHECK(sigma_delta_estimate(days) >= 0.0);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(sigma_delta_estimate({}), NoDataError);
    }
}

TEST_CASE("demand_impact") {
    CHECK(demand_impact(0.48, 25.0) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(demand_impact(0.0, 25.0) == 0.0);
    CHECK(demand_impact(0.65, 25.0) == doctest::Approx(16.25).epsilon(1e-12));
    CHECK_THROWS_AS(demand_impact(0.5, -1.0), ValidationError);
}
