#include <doctest.h>

#include <cmath>

#include "axi/errors.hpp"
#include "axi/loan_pricing.hpp"
#include "oracles.hpp"

using namespace axi;
using namespace axi::loan_pricing;

namespace {

const Date kStart{2020, 3, 1};

Series flat_series(const std::string& name, Date start, int days, double value) {
    Series s(name, SeriesKind::composite);
    for (int i = 0; i < days; ++i)
        s.append(start + i, value);
    return s;
}

} // namespace

TEST_CASE("daily_accrual") {
    CHECK(daily_accrual(3.6, 1'000'000.0) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(daily_accrual(0.0, 5'000'000.0) == 0.0);
    double sum = 0.0;
    for (int i = 0; i < 90; ++i)
        sum += daily_accrual(1.0, 1'000'000.0);
    CHECK(sum == doctest::Approx(2500.0).epsilon(1e-12));
}

TEST_CASE("cumulative_profit on a fixed margin") {
    const Series funding = flat_series("funding", kStart - 5, 130, 3.0);
    LoanSpec loan{"margin", 1'000'000.0, flat_series("loan", kStart - 5, 130, 4.0), 360};

    const ProfitPath path = cumulative_profit(loan, funding, kStart, 90);
    REQUIRE(path.cumulative.size() == 90);
    // One percent margin on $1M accrues $10,000/360 per day.
    CHECK(path.cumulative.front().value == doctest::Approx(10000.0 / 360.0).epsilon(1e-12));
    CHECK(path.cumulative.front().date == kStart + 1);
    CHECK(path.cumulative.back().value == doctest::Approx(2500.0).epsilon(1e-12));
    CHECK(path.cumulative.back().date == kStart + 90);
}

TEST_CASE("cumulative_profit edge cases") {
    const Series funding = flat_series("funding", kStart, 40, 3.0);
    SUBCASE("identical loan and funding is a flat zero path") {
        LoanSpec loan{"flat", 2'000'000.0, funding, 360};
        const ProfitPath path = cumulative_profit(loan, funding, kStart, 30);
        for (const auto& p : path.cumulative)
            CHECK(p.value == 0.0);
    }
    SUBCASE("coverage gap names the first missing date") {
        LoanSpec loan{"short", 1'000'000.0, flat_series("loan", kStart, 10, 4.0), 360};
        try {
            cumulative_profit(loan, funding, kStart, 30);
            FAIL("expected MissingDataError");
        } catch (const MissingDataError& e) {
            // Loan series ends at kStart+9 and carries at most 7 days.
            CHECK(std::string(e.what()).find((kStart + 17).to_string()) != std::string::npos);
        }
    }
    SUBCASE("invalid inputs") {
        LoanSpec loan{"bad", 0.0, funding, 360};
        CHECK_THROWS_AS(cumulative_profit(loan, funding, kStart, 30), ValidationError);
        LoanSpec ok{"ok", 1.0, funding, 360};
        CHECK_THROWS_AS(cumulative_profit(ok, funding, kStart, 0), ValidationError);
        LoanSpec amortizing{"am", 1.0, funding, 360, true};
        CHECK_THROWS_AS(cumulative_profit(amortizing, funding, kStart, 30), ValidationError);
    }
}

TEST_CASE("path independence: funding plus fixed spread") {
    oracles::TestRng rng(77);
    Series funding("funding", SeriesKind::composite);
    for (int i = 0; i < 400; ++i)
        funding.append(kStart - 10 + i, rng.uniform(0.5, 6.0));

    const double s = 1.25;
    const Series loan_rate = shift_series(funding, s, "loan");
    LoanSpec loan{"indexed", 3'000'000.0, loan_rate, 360};
    for (int days : {30, 90, 365}) {
        const ProfitPath path = cumulative_profit(loan, funding, kStart, days);
        const double expected = loan.notional * (s / 100.0) * days / 360.0;
        CHECK(path.cumulative.back().value == doctest::Approx(expected).epsilon(1e-10));
    }
}

TEST_CASE("horizon additivity") {
    oracles::TestRng rng(78);
    Series funding("funding", SeriesKind::composite);
    Series loan_rate("loan", SeriesKind::composite);
    for (int i = 0; i < 300; ++i) {
        funding.append(kStart - 10 + i, rng.uniform(0.5, 6.0));
        loan_rate.append(kStart - 10 + i, rng.uniform(0.5, 6.0));
    }
    LoanSpec loan{"l", 1'000'000.0, loan_rate, 360};
    const int a = 40, b = 70;
    const double whole = cumulative_profit(loan, funding, kStart, a + b).cumulative.back().value;
    const double first = cumulative_profit(loan, funding, kStart, a).cumulative.back().value;
    const double second =
        cumulative_profit(loan, funding, kStart + a, b).cumulative.back().value;
    CHECK(whole == doctest::Approx(first + second).epsilon(1e-12));
}

TEST_CASE("stress_report") {
    // Funding = base + credit spread; the spread jumps 100 bp inside the
    // stress window. The credit-sensitive scheme tracks funding exactly;
    // the flat scheme carries the calm-market-calibrated spread.
    const Date anchor{2020, 3, 1};
    Series funding("funding", SeriesKind::composite);
    Series sensitive("sensitive", SeriesKind::composite);
    Series flat("flat", SeriesKind::composite);
    for (int i = -10; i < 400; ++i) {
        const Date d = anchor + i;
        const bool stressed = i > 0 && i <= 90;
        const double credit = stressed ? 1.5 : 0.5;
        funding.append(d, 2.0 + credit);
        sensitive.append(d, 2.0 + credit + 1.0);
        flat.append(d, 2.0 + 0.5 + 1.0);
    }
    const std::vector<LoanSpec> schemes{
        {"sensitive", 1'000'000.0, sensitive, 360},
        {"flat", 1'000'000.0, flat, 360},
    };
    const std::vector<StressWindowSpec> windows{{"stress", anchor}};
    const std::vector<Horizon> horizons{{"1m", 1}, {"3m", 3}, {"12m", 12}};

    const auto rows = stress_report(schemes, funding, windows, horizons);
    REQUIRE(rows.size() == 3);

    // Over the first 90 days the flat scheme underearns by 100 bp p.a.;
    // hand-summed: $1M * 1% * 90/360 = $2,500.
    CHECK(rows[1].horizon_label == "3m");
    const int days_3m = rows[1].horizon_days;
    CHECK(days_3m == (anchor.add_months(3) - anchor));
    const double shortfall_90 = 1'000'000.0 * 0.01 * 90.0 / 360.0;
    const double expected_3m = 1'000'000.0 * 0.01 * days_3m / 360.0 -
                               1'000'000.0 * 0.01 * (days_3m - 90) / 360.0;
    CHECK(rows[1].profit_difference_usd == doctest::Approx(expected_3m).epsilon(1e-9));
    CHECK(expected_3m == doctest::Approx(shortfall_90).epsilon(1e-12));
    CHECK(rows[1].bp_period == doctest::Approx(shortfall_90 / 1'000'000.0 * 1e4).epsilon(1e-9));
    CHECK(rows[1].bp_annualized ==
          doctest::Approx(shortfall_90 / 1'000'000.0 / (days_3m / 360.0) * 1e4).epsilon(1e-9));

    SUBCASE("identical schemes report zero at every horizon") {
        const std::vector<LoanSpec> same{
            {"a", 1'000'000.0, sensitive, 360},
            {"b", 1'000'000.0, sensitive, 360},
        };
        for (const auto& row : stress_report(same, funding, windows, horizons)) {
            CHECK(row.bp_annualized == 0.0);
            CHECK(row.bp_period == 0.0);
        }
    }
    SUBCASE("antisymmetry under swapping the pair") {
        const std::vector<LoanSpec> swapped{schemes[1], schemes[0]};
        const auto reversed = stress_report(swapped, funding, windows, horizons);
        for (std::size_t i = 0; i < rows.size(); ++i)
            CHECK(reversed[i].bp_annualized == doctest::Approx(-rows[i].bp_annualized));
    }
    SUBCASE("mismatched notionals are rejected") {
        const std::vector<LoanSpec> bad{
            {"a", 1'000'000.0, sensitive, 360},
            {"b", 2'000'000.0, flat, 360},
        };
        CHECK_THROWS_AS(stress_report(bad, funding, windows, horizons), ValidationError);
    }
}
