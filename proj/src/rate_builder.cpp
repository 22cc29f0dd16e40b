#include "axi/rate_builder.hpp"

#include <algorithm>
#include <cmath>

#include "axi/errors.hpp"
#include "axi/index_engine.hpp"

namespace axi::rate_builder {

Series compounded_average(const Series& overnight_rates, int window_calendar_days,
                          int max_carry_days) {
    if (window_calendar_days <= 0)
        throw ValidationError("compounding window must be positive");
    const auto& points = overnight_rates.points();
    Series out(overnight_rates.name() + "_" + std::to_string(window_calendar_days) +
                   "d_compound",
               SeriesKind::average_30d_compound);
    out.set_calendar_id(overnight_rates.calendar_id());

    for (std::size_t i = 0; i < points.size(); ++i) {
        const Date value_date = points[i].date;
        const Date window_start = value_date - (window_calendar_days - 1); // window is [start, value_date]
        if (points.front().date > window_start)
            continue; // window reaches before the series starts

        // Walk back to the observation covering the window start.
        std::size_t j = i;
        while (points[j].date > window_start)
            --j;

        // Each observation accrues over [its date, next date), clipped to the
        // window; the clipped spans tile the window exactly.
        double growth = 1.0;
        for (std::size_t k = j; k <= i; ++k) {
            if (k < i && points[k + 1].date - points[k].date > max_carry_days)
                throw MissingDataError("rate series '" + overnight_rates.name() +
                                       "' has a coverage gap after " +
                                       points[k].date.to_string());
            const Date span_begin = std::max(points[k].date, window_start);
            const Date span_end = k < i ? points[k + 1].date : value_date + 1;
            const int days = std::min(span_end, value_date + 1) - span_begin;
            if (days <= 0)
                continue;
            growth *= 1.0 + (points[k].value / 100.0) * days / 360.0;
        }
        out.append(value_date, (growth - 1.0) * 360.0 / window_calendar_days * 100.0);
    }
    if (out.empty())
        throw MissingDataError("compounded_average: no date has full window coverage");
    return out;
}

Series simple_rolling_average(const Series& series, int window) {
    return index_engine::rolling_index(series, window, series.name() + "_simple_avg",
                                       SeriesKind::average_21bd_simple);
}

Series averaging_method_gap(const Series& daily_spreads, int simple_window,
                            int compound_window_days) {
    const Series simple = simple_rolling_average(daily_spreads, simple_window);
    const Series compound = compounded_average(daily_spreads, compound_window_days);
    return zip_series(simple, compound, daily_spreads.name() + "_avg_method_gap",
                      SeriesKind::macro, [](double a, double b) { return a - b; });
}

Series credit_sensitive_rate(const CompositeRateSpec& spec, const Series& reference,
                             const Series& index, std::string name) {
    if (spec.sensitivity < 0.0 || spec.sensitivity > 1.0)
        throw ValidationError("credit sensitivity must lie in [0, 1]");
    if (name.empty())
        name = reference.name() + "+" + std::to_string(spec.sensitivity) + "*" + index.name();

    Series out(std::move(name), SeriesKind::composite);
    std::size_t i = 0, j = 0;
    while (i < reference.size() && j < index.size()) {
        const auto& pr = reference.points()[i];
        const auto& pi = index.points()[j];
        if (pr.date == pi.date) {
            out.append(pr.date, pr.value + spec.fixed_spread + spec.sensitivity * pi.value);
            ++i;
            ++j;
        } else if (pr.date < pi.date) {
            ++i;
        } else {
            ++j;
        }
    }
    if (out.empty())
        throw NoDataError("credit_sensitive_rate: reference and index share no dates");
    return out;
}

double calibrate_equivalent_spread(const Series& target, const Series& base) {
    const std::vector<Date> dates = common_dates(target, base);
    if (dates.empty())
        throw NoDataError("calibrate_equivalent_spread: no overlapping dates");
    double target_sum = 0.0;
    double base_sum = 0.0;
    for (Date d : dates) {
        target_sum += *target.value_at(d);
        base_sum += *base.value_at(d);
    }
    const auto n = static_cast<double>(dates.size());
    return target_sum / n - base_sum / n;
}

Series libor_proxy(const Series& term_rate, double spread_bp) {
    Series out = shift_series(term_rate, spread_bp / 100.0, term_rate.name() + "_proxy");
    out.set_kind(SeriesKind::proxy);
    return out;
}

} // namespace axi::rate_builder
