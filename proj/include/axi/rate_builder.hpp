#pragma once

#include <string>

#include "axi/series.hpp"

namespace axi::rate_builder {

/// Reference rate plus fixed spread plus a slice of the credit-spread index:
/// value_t = R_t + s + c * index_t.
struct CompositeRateSpec {
    double fixed_spread = 0.0; // s, percent p.a.
    double sensitivity = 1.0;  // c in [0, 1]
};

/// Compounded average over a trailing calendar-day window, ACT/360:
/// value_t = [prod(1 + r_i * n_i / 360) - 1] * 360 / d over the days
/// (t - d, t], where n_i is the calendar span each observation covers
/// (1 on a plain business day, longer over weekends/holidays), clipped at
/// the window edges. Rates are percent in and percent out.
///
/// Dates whose window is not fully covered are omitted; an interior span
/// longer than `max_carry_days` is treated as a data gap and raises
/// MissingDataError.
Series compounded_average(const Series& overnight_rates, int window_calendar_days = 30,
                          int max_carry_days = 7);

/// Trailing arithmetic mean over the previous `window` observations,
/// value at t included; no partial windows.
Series simple_rolling_average(const Series& series, int window = 21);

/// Pointwise 21-observation simple average minus 30-calendar-day compounded
/// average of the same daily spread series; dates where either side is
/// unavailable are omitted.
Series averaging_method_gap(const Series& daily_spreads, int simple_window = 21,
                            int compound_window_days = 30);

/// value_t = R_t + s + c * index_t over the date intersection of the two
/// series. Throws ValidationError unless 0 <= c <= 1, NoDataError on an
/// empty intersection.
Series credit_sensitive_rate(const CompositeRateSpec& spec, const Series& reference,
                             const Series& index, std::string name = "");

/// Fixed spread making `base + spread` income-equivalent to `target`:
/// mean(target) - mean(base) over their common dates.
double calibrate_equivalent_spread(const Series& target, const Series& base);

/// Term rate plus a fixed fallback spread quoted in basis points.
Series libor_proxy(const Series& term_rate, double spread_bp = 11.48);

} // namespace axi::rate_builder
