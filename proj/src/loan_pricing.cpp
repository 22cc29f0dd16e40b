#include "axi/loan_pricing.hpp"

#include "axi/errors.hpp"

namespace axi::loan_pricing {

double daily_accrual(double rate_pct, double notional, int day_count_base) {
    return notional * (rate_pct / 100.0) / day_count_base;
}

ProfitPath cumulative_profit(const LoanSpec& loan, const Series& funding, Date start,
                             int horizon_days, int max_carry_days) {
    if (!(loan.notional > 0.0))
        throw ValidationError("loan notional must be positive");
    if (loan.amortizing)
        throw ValidationError("amortizing loans are not supported");
    if (horizon_days <= 0)
        throw ValidationError("horizon must be positive");

    ProfitPath path;
    path.loan_name = loan.name;
    path.notional = loan.notional;
    path.cumulative.reserve(horizon_days);

    double cumulative = 0.0;
    for (int j = 1; j <= horizon_days; ++j) {
        const Date d = start + j;
        const auto loan_rate = loan.rate_series.value_on_or_before(d, max_carry_days);
        if (!loan_rate)
            throw MissingDataError("loan series '" + loan.rate_series.name() +
                                   "' does not cover " + d.to_string());
        const auto funding_rate = funding.value_on_or_before(d, max_carry_days);
        if (!funding_rate)
            throw MissingDataError("funding series '" + funding.name() + "' does not cover " +
                                   d.to_string());
        cumulative += daily_accrual(*loan_rate - *funding_rate, loan.notional,
                                    loan.day_count_base);
        path.cumulative.push_back({d, cumulative});
    }
    return path;
}

std::vector<StressReportRow> stress_report(const std::vector<LoanSpec>& schemes,
                                           const Series& funding,
                                           const std::vector<StressWindowSpec>& windows,
                                           const std::vector<Horizon>& horizons) {
    if (schemes.size() < 2)
        throw ValidationError("stress report needs a baseline and at least one alternative");
    for (const auto& scheme : schemes)
        if (scheme.notional != schemes.front().notional)
            throw ValidationError("stress report schemes must share the notional");

    std::vector<StressReportRow> rows;
    for (const auto& window : windows) {
        for (std::size_t i = 1; i < schemes.size(); ++i) {
            for (const auto& horizon : horizons) {
                const int days = window.anchor.add_months(horizon.months) - window.anchor;
                const ProfitPath base =
                    cumulative_profit(schemes.front(), funding, window.anchor, days);
                const ProfitPath alt = cumulative_profit(schemes[i], funding, window.anchor, days);

                StressReportRow row;
                row.stress_name = window.name;
                row.comparison = schemes.front().name + " vs " + schemes[i].name;
                row.horizon_label = horizon.label;
                row.horizon_days = days;
                row.profit_difference_usd =
                    base.cumulative.back().value - alt.cumulative.back().value;
                const double fraction = row.profit_difference_usd / schemes.front().notional;
                row.bp_period = fraction * 1e4;
                row.bp_annualized = fraction / (days / 360.0) * 1e4;
                rows.push_back(row);
            }
        }
    }
    return rows;
}

} // namespace axi::loan_pricing
