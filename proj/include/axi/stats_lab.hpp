#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axi/series.hpp"

namespace axi::stats_lab {

enum class TransformKind { none, difference, log_difference };
enum class Frequency { daily, weekly, monthly, quarterly };

std::string to_string(TransformKind kind);
std::string to_string(Frequency freq);
std::optional<TransformKind> transform_kind_from_string(const std::string& text);
std::optional<Frequency> frequency_from_string(const std::string& text);

struct TransformSpec {
    TransformKind kind = TransformKind::difference;
    Frequency frequency = Frequency::daily;
};

/// Differencing plus temporal aggregation.
///
/// daily: change between consecutive observations, dated at the later one.
/// weekly/monthly: daily changes averaged within the ISO week / calendar
/// month, dated at the period's last calendar day.
/// quarterly: last observation of each quarter, then differenced across
/// consecutive quarters (dated at the later quarter's end).
/// kind none aggregates levels (period mean) without differencing.
///
/// log_difference works on ln(x) and throws DomainError on nonpositive
/// values.
Series transform(const Series& series, const TransformSpec& spec);

struct CorrelationResult {
    int lag = 0;
    double correlation = 0.0;
    double p_value = 1.0; // two-sided t test, n - 2 degrees of freedom
    int n = 0;            // sample size after alignment and shifting
};

/// Pearson correlation of x_t against y_{t-lag} for lag = 0..max_lag, on the
/// period grid common to both series (inner join, then positional shift).
/// The p-value equals the slope test of the univariate regression of x on
/// the lagged y. Throws DomainError when either side has zero variance,
/// NoDataError when fewer than 3 pairs remain at some lag.
std::vector<CorrelationResult> lagged_correlation(const Series& x, const Series& y, int max_lag);

struct GrangerResult {
    double f_statistic = 0.0;
    double p_value = 1.0;
    int lag_order = 0;
    int n = 0; // regression sample size
};

struct GrangerTest {
    GrangerResult x_to_y; // do lags of x improve the AR model of y?
    GrangerResult y_to_x;
};

/// Lag-exclusion F test in both directions on stationary (differenced)
/// inputs: restricted AR(max_lag) of the target versus the model augmented
/// with max_lag lags of the other series. Throws NoDataError when the
/// common sample is too short (needs n > 2*max_lag + 1 regression rows) and
/// DomainError when the design matrix is singular (constant series,
/// x aliased with y).
GrangerTest granger_test(const Series& x, const Series& y, int max_lag = 4);

/// One direction only; exposed for tests and batch runs.
GrangerResult granger_direction(const std::vector<double>& cause,
                                const std::vector<double>& effect, int max_lag);

} // namespace axi::stats_lab
