#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "axi/series.hpp"
#include "axi/transaction.hpp"

namespace axi::index_engine {

/// One (spread, dollar weight) observation for the weighted median.
struct WeightedValue {
    double value = 0.0;
    double weight = 0.0;
};

/// Dollar-volume-weighted median.
///
/// Convention: lower weighted median with midpoint interpolation. Zero-weight
/// items carry no mass and are ignored. Scanning distinct values in
/// increasing order, the result is the smallest value whose cumulative weight
/// reaches half the total; if the cumulative weight equals half exactly at
/// that value, the result is the midpoint to the next distinct value.
///
/// Throws NoDataError when no item has positive weight, ValidationError on a
/// negative weight.
double weighted_median(std::span<const WeightedValue> items);

/// Volume and volume-weighted mean maturity of one maturity bucket.
struct BucketVolume {
    double volume = 0.0;       // USD
    double avg_maturity = 0.0; // years, volume-weighted mean
};

struct BucketWeights {
    double st_weight = 0.0;
    std::vector<double> lt_weights;
};

/// Maturity-weighted dollar-volume weights across the ST segment and the
/// given LT buckets: weight_b = maturity_b * volume_b / sum over all b.
/// Throws NoDataError when every maturity*volume product is zero.
BucketWeights bucket_weights(double st_volume, double st_avg_maturity,
                             std::span<const BucketVolume> lt);

/// Per-date decomposition of the composite daily spread.
///
/// Empty buckets carry NaN spreads/maturities and zero weight/volume.
struct DailySpreadDecomposition {
    Date date;
    double st_spread = std::nan("");
    std::array<double, kLtBucketCount> lt_spreads{std::nan(""), std::nan(""), std::nan(""),
                                                  std::nan("")};
    double st_weight = 0.0;
    std::array<double, kLtBucketCount> lt_weights{};
    double daily_spread = std::nan("");
    double st_volume = 0.0;
    std::array<double, kLtBucketCount> lt_volumes{};
    double st_avg_maturity = std::nan("");
    std::array<double, kLtBucketCount> lt_avg_maturities{std::nan(""), std::nan(""), std::nan(""),
                                                         std::nan("")};
    double weighted_avg_maturity = std::nan("");

    bool has_st() const { return st_volume > 0.0; }
    bool has_lt() const;

    /// Combined LT weight (sum over LT buckets).
    double lt_weight_total() const;
    /// LT median spreads combined with the same maturity-weighted volume
    /// weights, renormalized within the LT segment; NaN when no LT trades.
    double lt_spread_combined() const;
    /// Maturity-weighted dollar volumes per segment.
    double st_maturity_volume() const;
    double lt_maturity_volume() const;
};

/// Composite spread for one trade date (Spread_t): per-bucket weighted-median
/// spreads combined with maturity-weighted dollar-volume weights.
/// Ineligible transactions are ignored; throws NoDataError when no eligible
/// transaction remains.
DailySpreadDecomposition daily_spread(Date date, std::span<const Transaction> transactions);

/// Risk-free zero curve sampled at tenor points, linearly interpolated in
/// maturity and extrapolated flat beyond the ends. Used to turn raw trade
/// rates into spreads when inputs do not carry a spread column.
class RiskFreeCurve {
public:
    struct Point {
        double tenor = 0.0; // years
        double rate = 0.0;  // percent p.a.
    };

    /// Points need not arrive sorted; duplicate tenors are rejected.
    explicit RiskFreeCurve(std::vector<Point> points);

    double rate_at(double tenor) const;
    /// spread = trade rate - matched-tenor risk-free rate.
    double spread_over(double trade_rate, double tenor) const;

private:
    std::vector<Point> points_;
};

/// Volume-weighted mean maturity over the eligible trades of one date.
/// Throws NoDataError on zero total volume.
double weighted_avg_maturity(std::span<const Transaction> transactions);

/// Trailing moving average over the previous `window` observations of the
/// series, the value at t included; dates with fewer than `window`
/// observations behind them are omitted, never zero-filled.
Series rolling_index(const Series& daily_spreads, int window = 21, std::string name = "",
                     SeriesKind kind = SeriesKind::index);

/// Trailing mean share of LT maturity-weighted volume:
/// value_t = (1/window) * sum over the window of LT_mv / (ST_mv + LT_mv).
/// Decompositions must be date-ordered. Throws NoDataError on empty input.
Series lt_weight_fraction(std::span<const DailySpreadDecomposition> decompositions,
                          int window = 21);

/// Which transaction pool an index draws on.
enum class IndexScope { axi, fxi };

std::string to_string(IndexScope scope);

/// Everything one index run produces: the published index, the per-date
/// decompositions behind it, and the raw daily series.
struct IndexComputation {
    Series index;                                        // rolling average
    Series daily_spreads;                                // Spread_t
    Series underlying_volume;                            // total eligible USD per date
    std::vector<DailySpreadDecomposition> decompositions; // date-ordered
};

/// Full pipeline: filter by scope (AXI keeps bank trades, FXI keeps all),
/// group by trade date, compute each date's decomposition, roll the index.
/// Dates with no eligible transactions are omitted from every output.
IndexComputation compute_index(std::span<const Transaction> transactions, IndexScope scope,
                               int window = 21);

enum class BenchmarkSource { primary, fallback };

struct FallbackValue {
    double value = 0.0;
    BenchmarkSource source = BenchmarkSource::primary;
};

/// Published benchmark value for `date`: the primary index when its
/// underlying dollar volume on that date is at least `min_volume`, otherwise
/// the fallback index. Throws NoDataError when neither index has the date.
FallbackValue fallback_value(Date date, const Series& primary, const Series& fallback,
                             const Series& primary_volume, double min_volume);

} // namespace axi::index_engine
