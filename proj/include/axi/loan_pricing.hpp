#pragma once

#include <string>
#include <vector>

#include "axi/series.hpp"

namespace axi::loan_pricing {

/// Non-amortizing revolving credit line: interest accrues daily on the full
/// notional at the rate series' value, day count ACT/360.
struct LoanSpec {
    std::string name;
    double notional = 0.0; // USD, > 0
    Series rate_series;    // percent p.a.
    int day_count_base = 360;
    bool amortizing = false; // only false is supported
};

/// One calendar day of interest: notional * rate / day count base.
double daily_accrual(double rate_pct, double notional, int day_count_base = 360);

/// Cumulative lender profit, accrued on every calendar day:
/// cum_s = sum_{j=1..s} (loan rate_{t+j} - funding rate_{t+j}) / 360 * notional,
/// with rates carried forward from the last publication (weekends/holidays).
struct ProfitPath {
    std::string loan_name;
    double notional = 0.0;
    std::vector<SeriesPoint> cumulative; // dates t+1 .. t+horizon, USD
};

/// Throws MissingDataError naming the first date either series fails to
/// cover, ValidationError for a non-positive notional or horizon.
ProfitPath cumulative_profit(const LoanSpec& loan, const Series& funding, Date start,
                             int horizon_days, int max_carry_days = 7);

/// Horizon measured in calendar months from the stress anchor.
struct Horizon {
    std::string label;
    int months = 0;
};

struct StressWindowSpec {
    std::string name;
    Date anchor;
};

/// One row of the stress report: baseline scheme versus an alternative over
/// one stress window and horizon, expressed in basis points of notional.
struct StressReportRow {
    std::string stress_name;
    std::string comparison; // "baseline vs alternative"
    std::string horizon_label;
    int horizon_days = 0;
    double profit_difference_usd = 0.0;
    double bp_annualized = 0.0; // diff / notional / (days/360) * 1e4
    double bp_period = 0.0;     // diff / notional * 1e4
};

/// Profit pickup of `schemes[0]` over each other scheme, per stress window
/// and horizon. All schemes must share the notional.
std::vector<StressReportRow> stress_report(const std::vector<LoanSpec>& schemes,
                                           const Series& funding,
                                           const std::vector<StressWindowSpec>& windows,
                                           const std::vector<Horizon>& horizons);

} // namespace axi::loan_pricing
