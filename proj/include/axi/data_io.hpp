#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "axi/index_engine.hpp"
#include "axi/series.hpp"
#include "axi/transaction.hpp"

namespace axi::data_io {

inline constexpr const char* kTransactionHeader =
    "trade_date,maturity_years,volume_usd,spread_pct,scope";
inline constexpr const char* kSeriesHeader = "date,value_pct";

/// Identifies the synthetic generator algorithm; bumped whenever a change
/// would alter generated fixtures.
inline constexpr const char* kGeneratorVersion = "axi-synth/1";

struct TransactionParseResult {
    std::vector<Transaction> transactions;
    std::vector<std::string> warnings;
};

/// Reads the transaction CSV schema (header required). Malformed rows,
/// negative volumes, nonpositive maturities, unknown scope tags and bad
/// dates raise ValidationError naming line and column. An empty body yields
/// an empty list plus a warning.
TransactionParseResult parse_transactions(const std::filesystem::path& file);
TransactionParseResult parse_transactions(std::istream& in, const std::string& source_name);

/// Writes transactions in the same schema; round-trips exactly through
/// parse_transactions. Comment lines (generator stamp, configuration echo)
/// go before the header.
void write_transactions(const std::filesystem::path& file, std::span<const Transaction> txs,
                        const std::vector<std::string>& comments = {});
void write_transactions(std::ostream& out, std::span<const Transaction> txs,
                        const std::vector<std::string>& comments = {});

struct SeriesParseResult {
    Series series;
    std::vector<std::string> warnings;
};

/// Reads the `date,value_pct` schema with an optional `# kind:` header.
/// Unsorted rows are sorted silently; a duplicated date raises
/// ValidationError; a missing kind header defaults to composite with a
/// warning.
SeriesParseResult parse_series(const std::filesystem::path& file);
SeriesParseResult parse_series(std::istream& in, const std::string& source_name);

void write_series(const std::filesystem::path& file, const Series& series);
void write_series(std::ostream& out, const Series& series);

/// Curve CSV schema `tenor_years,rate_pct`, one point per row.
index_engine::RiskFreeCurve parse_curve(const std::filesystem::path& file);
index_engine::RiskFreeCurve parse_curve(std::istream& in, const std::string& source_name);

/// Decomposition CSV: one row per date mirroring DailySpreadDecomposition
/// (spreads, weights, volumes, weighted average maturity); empty buckets
/// serialize as empty fields. Per-bucket mean maturities are not part of the
/// schema and come back NaN.
void write_decompositions(const std::filesystem::path& file,
                          std::span<const index_engine::DailySpreadDecomposition> days);
void write_decompositions(std::ostream& out,
                          std::span<const index_engine::DailySpreadDecomposition> days);

std::vector<index_engine::DailySpreadDecomposition>
parse_decompositions(const std::filesystem::path& file);
std::vector<index_engine::DailySpreadDecomposition> parse_decompositions(std::istream& in,
                                                                         const std::string& source_name);

/// One stress regime inside the synthetic span: LT trade spreads are scaled
/// by lt_spread_multiplier, ST volumes by st_volume_multiplier.
struct StressWindow {
    Date start;
    Date end; // inclusive
    double lt_spread_multiplier = 1.0;
    double st_volume_multiplier = 1.0;
};

/// Everything the generator needs; identical configs produce byte-identical
/// datasets. Defaults target the published calm-market level and volume
/// shape.
struct SyntheticConfig {
    std::uint64_t seed = 42;
    Date start{2022, 1, 1};
    Date end{2022, 12, 31};
    // Per bucket {ST, LT1..LT4}:
    std::array<double, 5> volume_scale{320e9, 30e9, 25e9, 20e9, 15e9};  // USD per day
    std::array<double, 5> calm_spread{0.07, 0.70, 0.75, 0.80, 0.85};    // percent
    std::array<int, 5> trades_per_day{12, 5, 4, 4, 3};
    double volume_dispersion = 0.5;      // lognormal sigma of trade sizes
    double spread_vol = 0.02;            // daily innovation of bucket levels, percent
    double idio_spread_vol = 0.02;       // per-trade noise, percent
    double mean_reversion = 0.10;        // pull toward the calm level per day
    double bank_share = 0.65;            // probability a trade is bank scope
    double nonbank_spread_offset = 0.20; // percent added to nonbank trades
    std::vector<StressWindow> stress_windows;

    std::vector<std::string> describe() const; // key=value echo for file comments
};

/// Loads a flat `key = value` configuration file ('#' comments; keys as in
/// describe(); `stress_window = start,end,lt_mult,st_vol_mult` repeatable).
/// Unknown keys raise ValidationError.
SyntheticConfig load_synthetic_config(const std::filesystem::path& file);

/// Deterministic synthetic transaction pool: per-bucket mean-reverting
/// spread levels, lognormal trade sizes, stress-window scaling. All
/// randomness derives from config.seed through the axi-synth/1 draw order.
std::vector<Transaction> generate_synthetic(const SyntheticConfig& config);

} // namespace axi::data_io
