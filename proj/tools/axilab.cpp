// axilab: credit-spread index engine and loan analytics CLI.
//
// Subcommands: synth, index, rates (compound|simple|gap|composite|
// calibrate|proxy), loan, risk (curve|rar|sigma-delta|demand), stats.
// Exit codes: 0 success, 1 data/validation error, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "axi/data_io.hpp"
#include "axi/errors.hpp"
#include "axi/index_engine.hpp"
#include "axi/loan_pricing.hpp"
#include "axi/rate_builder.hpp"
#include "axi/risk_analytics.hpp"
#include "axi/stats_lab.hpp"
#include "report.hpp"

namespace fs = std::filesystem;
using namespace axi;

namespace {

std::string fmt(double value, int decimals = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

/// Flat key = value echo of one run's resolved configuration.
class Manifest {
public:
    explicit Manifest(std::string subcommand) { add("subcommand", std::move(subcommand)); }

    void add(const std::string& key, std::string value) {
        entries_.emplace_back(key, std::move(value));
    }
    void add(const std::string& key, double value) { add(key, fmt(value)); }
    void add(const std::string& key, int value) { add(key, std::to_string(value)); }
    void add_output(const fs::path& path) { add("output", path.string()); }

    void write(const fs::path& directory) const {
        const fs::path path = directory / "run_manifest.txt";
        std::ofstream out(path);
        if (!out)
            throw ValidationError("cannot write manifest '" + path.string() + "'");
        for (const auto& [key, value] : entries_)
            out << key << " = " << value << "\n";
        out << "output_directory = " << directory.string() << "\n";
        out << "exit_code_semantics = 0:ok 1:data_error 2:usage_error\n";
        out << "run_timestamp = " << timestamp() << "\n";
    }

private:
    static std::string timestamp() {
        const std::time_t now = std::time(nullptr);
        char buf[32];
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        return buf;
    }

    std::vector<std::pair<std::string, std::string>> entries_;
};

fs::path ensure_out_dir(const std::string& out) {
    const fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw ValidationError("cannot create output directory '" + out + "'");
    return dir;
}

Series load_series(const std::string& path, std::vector<std::string>& warnings) {
    auto result = data_io::parse_series(fs::path(path));
    for (auto& w : result.warnings)
        warnings.push_back(std::move(w));
    return std::move(result.series);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t begin = 0;
    while (true) {
        const auto comma = text.find(',', begin);
        out.push_back(text.substr(begin, comma == std::string::npos ? std::string::npos
                                                                    : comma - begin));
        if (comma == std::string::npos)
            break;
        begin = comma + 1;
    }
    return out;
}

std::pair<std::string, std::string> split_key_value(const std::string& text,
                                                    const std::string& what) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= text.size())
        throw ValidationError(what + " must look like NAME=VALUE, got '" + text + "'");
    return {text.substr(0, eq), text.substr(eq + 1)};
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

struct SynthArgs {
    std::string out;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> start, end;
    std::vector<std::string> stress;
};

int run_synth(const SynthArgs& args) {
    data_io::SyntheticConfig config;
    std::string config_source = "defaults";
    std::string config_path = args.config_path;
    if (config_path.empty())
        if (const char* env = std::getenv("AXILAB_CONFIG"))
            config_path = env;
    if (!config_path.empty()) {
        config = data_io::load_synthetic_config(config_path);
        config_source = config_path;
    }
    // Flags override the config file, which overrides defaults.
    if (args.seed)
        config.seed = *args.seed;
    if (args.start)
        config.start = Date::parse(*args.start);
    if (args.end)
        config.end = Date::parse(*args.end);
    for (const auto& text : args.stress) {
        const auto fields = split_list(text);
        if (fields.size() != 4)
            throw ValidationError("--stress needs start,end,lt_mult,st_vol_mult");
        config.stress_windows.push_back({Date::parse(fields[0]), Date::parse(fields[1]),
                                         std::stod(fields[2]), std::stod(fields[3])});
    }

    const fs::path dir = ensure_out_dir(args.out);
    const auto transactions = data_io::generate_synthetic(config);
    const fs::path tx_path = dir / "transactions.csv";
    data_io::write_transactions(tx_path, transactions, config.describe());

    Manifest manifest("synth");
    manifest.add("config_source", config_source);
    for (const auto& line : config.describe()) {
        const auto [key, value] = split_key_value(line, "config line");
        manifest.add("config." + key, value);
    }
    manifest.add("transactions", static_cast<int>(transactions.size()));
    manifest.add_output(tx_path);
    manifest.write(dir);

    std::cout << "wrote " << transactions.size() << " transactions to " << tx_path.string()
              << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// index
// ---------------------------------------------------------------------------

struct IndexArgs {
    std::string in;
    std::string out;
    std::string scope = "axi";
    int window = 21;
    std::string holidays;
    std::string risk_free_curve;
    bool emit_fallback = false;
    std::optional<double> min_volume;
};

/// Per-date threshold: `share` times the median of the trailing (up to) 21
/// volume observations ending at the date.
Series trailing_median_threshold(const Series& volume, const Series& idx, double share) {
    Series thresholds("fallback_threshold", SeriesKind::macro);
    for (const auto& p : idx.points()) {
        const std::size_t end = volume.find(p.date);
        if (end == Series::npos)
            continue;
        std::vector<double> window;
        for (std::size_t j = end >= 20 ? end - 20 : 0; j <= end; ++j)
            window.push_back(volume.points()[j].value);
        std::sort(window.begin(), window.end());
        const std::size_t n = window.size();
        const double median = n % 2 ? window[n / 2] : (window[n / 2 - 1] + window[n / 2]) / 2.0;
        thresholds.append(p.date, share * median);
    }
    return thresholds;
}

int run_index(const IndexArgs& args) {
    std::vector<std::string> warnings;
    auto parsed = data_io::parse_transactions(fs::path(args.in));
    warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());

    std::vector<Transaction> transactions = std::move(parsed.transactions);
    if (!args.risk_free_curve.empty()) {
        // The spread column carried outright trade rates; net out the
        // matched-tenor risk-free rate.
        const auto curve = data_io::parse_curve(fs::path(args.risk_free_curve));
        for (auto& tx : transactions)
            tx.spread = curve.spread_over(tx.spread, tx.maturity);
    }
    if (!args.holidays.empty()) {
        const BusinessCalendar calendar = BusinessCalendar::from_file(args.holidays);
        const std::size_t before = transactions.size();
        std::erase_if(transactions, [&](const Transaction& tx) {
            return !calendar.is_business_day(tx.trade_date);
        });
        if (transactions.size() != before)
            warnings.push_back(std::to_string(before - transactions.size()) +
                               " transactions on non-business days dropped");
    }

    const bool want_axi = args.scope == "axi" || args.scope == "both";
    const bool want_fxi = args.scope == "fxi" || args.scope == "both";
    if (args.emit_fallback && args.scope != "both")
        throw ValidationError("--emit-fallback requires --scope both");

    const fs::path dir = ensure_out_dir(args.out);
    Manifest manifest("index");
    manifest.add("input.transactions", args.in);
    manifest.add("scope", args.scope);
    manifest.add("window", args.window);
    manifest.add("calendar", args.holidays.empty() ? "weekday" : args.holidays);
    if (!args.risk_free_curve.empty())
        manifest.add("input.risk_free_curve", args.risk_free_curve);

    std::map<std::string, index_engine::IndexComputation> runs;
    if (want_axi)
        runs.emplace("axi", index_engine::compute_index(
                                transactions, index_engine::IndexScope::axi, args.window));
    if (want_fxi)
        runs.emplace("fxi", index_engine::compute_index(
                                transactions, index_engine::IndexScope::fxi, args.window));

    for (auto& [label, run] : runs) {
        const fs::path decomposition_path = dir / ("decomposition_" + label + ".csv");
        data_io::write_decompositions(decomposition_path, run.decompositions);
        manifest.add_output(decomposition_path);

        const fs::path index_path = dir / ("index_" + label + ".csv");
        data_io::write_series(index_path, run.index);
        manifest.add_output(index_path);

        const fs::path daily_path = dir / ("daily_spread_" + label + ".csv");
        data_io::write_series(daily_path, run.daily_spreads);
        manifest.add_output(daily_path);

        const fs::path volume_path = dir / ("volume_" + label + ".csv");
        data_io::write_series(volume_path, run.underlying_volume);
        manifest.add_output(volume_path);

        const fs::path fraction_path = dir / ("lt_weight_fraction_" + label + ".csv");
        data_io::write_series(fraction_path,
                              index_engine::lt_weight_fraction(run.decompositions, args.window));
        manifest.add_output(fraction_path);

        manifest.add("dates." + label, static_cast<int>(run.daily_spreads.size()));
        manifest.add("published." + label, static_cast<int>(run.index.size()));
    }

    if (args.emit_fallback) {
        const auto& axi_run = runs.at("axi");
        const auto& fxi_run = runs.at("fxi");
        Series thresholds;
        if (args.min_volume) {
            manifest.add("fallback.min_volume", *args.min_volume);
        } else {
            thresholds = trailing_median_threshold(axi_run.underlying_volume, axi_run.index, 0.5);
            manifest.add("fallback.min_volume", "0.5 * trailing 21-day median volume");
        }

        axilab::Report report;
        report.columns = {"date", "value_pct", "source"};
        for (const auto& p : fxi_run.index.points()) {
            const double min_volume =
                args.min_volume ? *args.min_volume
                                : thresholds.value_at(p.date).value_or(
                                      std::numeric_limits<double>::infinity());
            try {
                const auto value = index_engine::fallback_value(
                    p.date, axi_run.index, fxi_run.index, axi_run.underlying_volume, min_volume);
                report.rows.push_back(
                    {p.date.to_string(), fmt(value.value),
                     value.source == index_engine::BenchmarkSource::primary ? "primary"
                                                                            : "fallback"});
            } catch (const NoDataError&) {
                // Neither index publishable that day; leave the date out.
            }
        }
        for (const auto& path :
             axilab::emit_report(report, dir, "fallback", axilab::ReportFormat::csv))
            manifest.add_output(path);
    }

    manifest.write(dir);
    print_warnings(warnings);
    std::cout << "index outputs written to " << dir.string() << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// rates
// ---------------------------------------------------------------------------

int write_rate_output(const Series& series, const fs::path& dir, const std::string& stem,
                      Manifest& manifest) {
    const fs::path path = dir / (stem + ".csv");
    data_io::write_series(path, series);
    manifest.add_output(path);
    manifest.write(dir);
    std::cout << "wrote " << path.string() << " (" << series.size() << " points)\n";
    return 0;
}

// ---------------------------------------------------------------------------
// loan
// ---------------------------------------------------------------------------

struct LoanArgs {
    std::string funding;
    std::vector<std::string> schemes; // NAME=FILE, first is the baseline
    std::vector<std::string> anchors; // NAME=DATE
    std::string horizons = "1,3,12";
    double notional = 1'000'000.0;
    std::string out;
    std::string format = "csv";
};

int run_loan(const LoanArgs& args) {
    std::vector<std::string> warnings;
    const Series funding = load_series(args.funding, warnings);

    std::vector<loan_pricing::LoanSpec> schemes;
    for (const auto& text : args.schemes) {
        const auto [name, path] = split_key_value(text, "--scheme");
        schemes.push_back({name, args.notional, load_series(path, warnings), 360});
    }
    std::vector<loan_pricing::StressWindowSpec> windows;
    for (const auto& text : args.anchors) {
        const auto [name, date] = split_key_value(text, "--anchor");
        windows.push_back({name, Date::parse(date)});
    }
    std::vector<loan_pricing::Horizon> horizons;
    for (const auto& item : split_list(args.horizons))
        if (!item.empty())
            horizons.push_back({item + "m", std::stoi(item)});
    if (horizons.empty())
        throw ValidationError("--horizons must name at least one month count");

    const fs::path dir = ensure_out_dir(args.out);
    Manifest manifest("loan");
    manifest.add("input.funding", args.funding);
    manifest.add("notional", args.notional);
    manifest.add("horizons", args.horizons);

    // Full profit path per scheme and stress window, over the longest horizon.
    const int max_months =
        std::max_element(horizons.begin(), horizons.end(),
                         [](const auto& a, const auto& b) { return a.months < b.months; })
            ->months;
    for (const auto& window : windows) {
        const int days = window.anchor.add_months(max_months) - window.anchor;
        for (const auto& scheme : schemes) {
            const auto path =
                loan_pricing::cumulative_profit(scheme, funding, window.anchor, days);
            Series profit("profit_" + scheme.name + "_" + window.name, SeriesKind::macro);
            for (const auto& p : path.cumulative)
                profit.append(p.date, p.value);
            const fs::path file = dir / ("profit_" + scheme.name + "_" + window.name + ".csv");
            data_io::write_series(file, profit);
            manifest.add_output(file);
        }
    }

    const auto rows = loan_pricing::stress_report(schemes, funding, windows, horizons);
    axilab::Report report;
    report.columns = {"stress",        "comparison",      "horizon",       "horizon_days",
                      "profit_diff_usd", "bp_annualized", "bp_period"};
    for (const auto& row : rows)
        report.rows.push_back({row.stress_name, row.comparison, row.horizon_label,
                               std::to_string(row.horizon_days),
                               fmt(row.profit_difference_usd, 2), fmt(row.bp_annualized, 2),
                               fmt(row.bp_period, 2)});
    for (const auto& path : axilab::emit_report(report, dir, "stress_report",
                                                axilab::report_format_from_string(args.format)))
        manifest.add_output(path);

    manifest.write(dir);
    print_warnings(warnings);
    return 0;
}

// ---------------------------------------------------------------------------
// risk curve
// ---------------------------------------------------------------------------

struct RiskCurveArgs {
    double spread = 1.0;
    double c_step = 0.01;
    risk_analytics::RarParams params;
    double elasticity = 25.0;
    std::string out;
    std::string format = "csv";
};

int run_risk_curve(const RiskCurveArgs& args) {
    if (!(args.c_step > 0.0) || args.c_step > 1.0)
        throw ValidationError("--c-step must lie in (0, 1]");
    std::vector<double> grid;
    for (double c = 0.0; c < 1.0 + args.c_step / 2.0; c += args.c_step)
        grid.push_back(std::min(c, 1.0));
    const auto curve = risk_analytics::discount_curve(args.spread, args.params, grid);

    const fs::path dir = ensure_out_dir(args.out);
    axilab::Report report;
    report.columns = {"c", "spread_prime_pct", "discount_bp"};
    for (const auto& point : curve)
        report.rows.push_back(
            {fmt(point.sensitivity, 4), fmt(point.spread_prime, 6), fmt(point.discount_bp, 4)});

    Manifest manifest("risk curve");
    manifest.add("spread_pct", args.spread);
    manifest.add("mean_axi_pct", args.params.mean_index);
    manifest.add("sigma_axi_pct", args.params.sigma_index);
    manifest.add("mean_delta_pct", args.params.mean_delta);
    manifest.add("sigma_delta_pct", args.params.sigma_delta);
    manifest.add("elasticity", args.elasticity);
    for (const auto& path : axilab::emit_report(report, dir, "discount_curve",
                                                axilab::report_format_from_string(args.format)))
        manifest.add_output(path);
    manifest.write(dir);

    const double final_discount = curve.back().discount_bp;
    std::cout << "discount at c=1: " << fmt(final_discount, 2) << " bp; demand impact at "
              << "elasticity " << fmt(args.elasticity, 0) << ": "
              << fmt(risk_analytics::demand_impact(final_discount / 100.0, args.elasticity), 2)
              << "%\n";
    return 0;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsArgs {
    std::string x;
    std::string x_transform = "difference";
    std::string y;
    std::string y_transform = "difference";
    std::string indicators; // manifest file: name,path,transform per line
    std::string frequency = "weekly";
    int lags = 3;
    bool granger = false;
    int granger_lags = 4;
    std::string out;
    std::string format = "csv";
};

stats_lab::TransformSpec make_spec(const std::string& kind_text, const std::string& freq_text) {
    const auto kind = stats_lab::transform_kind_from_string(kind_text);
    if (!kind)
        throw ValidationError("unknown transform '" + kind_text + "'");
    const auto freq = stats_lab::frequency_from_string(freq_text);
    if (!freq)
        throw ValidationError("unknown frequency '" + freq_text + "'");
    return {*kind, *freq};
}

int run_stats(const StatsArgs& args) {
    std::vector<std::string> warnings;
    const Series x_raw = load_series(args.x, warnings);
    const Series x = stats_lab::transform(x_raw, make_spec(args.x_transform, args.frequency));

    struct Indicator {
        std::string name;
        Series series;
    };
    std::vector<Indicator> indicators;
    if (!args.indicators.empty()) {
        std::ifstream in(args.indicators);
        if (!in)
            throw ValidationError("cannot open indicator manifest '" + args.indicators + "'");
        std::string line;
        std::size_t line_no = 0;
        const fs::path base = fs::path(args.indicators).parent_path();
        while (std::getline(in, line)) {
            ++line_no;
            if (auto pos = line.find('#'); pos != std::string::npos)
                line.erase(pos);
            if (line.find_first_not_of(" \t\r\n") == std::string::npos)
                continue;
            std::vector<std::string> fields;
            for (auto& field : split_list(line)) {
                const auto s = field.find_first_not_of(" \t\r\n");
                const auto e = field.find_last_not_of(" \t\r\n");
                fields.push_back(s == std::string::npos ? "" : field.substr(s, e - s + 1));
            }
            if (fields.size() != 3)
                throw ValidationError("indicator manifest line " + std::to_string(line_no) +
                                      " needs name,path,transform");
            fs::path p(fields[1]);
            if (p.is_relative())
                p = base / p;
            indicators.push_back(
                {fields[0], stats_lab::transform(load_series(p.string(), warnings),
                                                 make_spec(fields[2], args.frequency))});
        }
    }
    if (!args.y.empty())
        indicators.push_back({fs::path(args.y).stem().string(),
                              stats_lab::transform(load_series(args.y, warnings),
                                                   make_spec(args.y_transform, args.frequency))});
    if (indicators.empty())
        throw ValidationError("stats needs --y or --indicators");

    const fs::path dir = ensure_out_dir(args.out);
    Manifest manifest("stats");
    manifest.add("input.x", args.x);
    manifest.add("x_transform", args.x_transform);
    manifest.add("frequency", args.frequency);
    manifest.add("lags", args.lags);

    axilab::Report correlations;
    correlations.columns = {"indicator", "lag",         "correlation",
                            "p_value",   "n",           "significant_5pct",
                            "significant_10pct"};
    axilab::Report granger;
    granger.columns = {"indicator", "direction", "lag_order", "f_statistic", "p_value", "n"};

    for (const auto& indicator : indicators) {
        for (const auto& r : stats_lab::lagged_correlation(x, indicator.series, args.lags))
            correlations.rows.push_back({indicator.name, std::to_string(r.lag),
                                         fmt(r.correlation, 4), fmt(r.p_value, 6),
                                         std::to_string(r.n), r.p_value < 0.05 ? "yes" : "no",
                                         r.p_value < 0.10 ? "yes" : "no"});
        if (args.granger) {
            const auto g = stats_lab::granger_test(indicator.series, x, args.granger_lags);
            granger.rows.push_back({indicator.name, indicator.name + "->x",
                                    std::to_string(g.x_to_y.lag_order),
                                    fmt(g.x_to_y.f_statistic, 4), fmt(g.x_to_y.p_value, 6),
                                    std::to_string(g.x_to_y.n)});
            granger.rows.push_back({indicator.name, "x->" + indicator.name,
                                    std::to_string(g.y_to_x.lag_order),
                                    fmt(g.y_to_x.f_statistic, 4), fmt(g.y_to_x.p_value, 6),
                                    std::to_string(g.y_to_x.n)});
        }
    }

    const auto format = axilab::report_format_from_string(args.format);
    for (const auto& path : axilab::emit_report(correlations, dir, "correlations", format))
        manifest.add_output(path);
    if (args.granger) {
        manifest.add("granger_lags", args.granger_lags);
        for (const auto& path : axilab::emit_report(granger, dir, "granger", format))
            manifest.add_output(path);
    }
    manifest.write(dir);
    print_warnings(warnings);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Credit-spread benchmark index engine and loan analytics"};
    app.require_subcommand(1);

    // --- synth ---
    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a seeded synthetic transaction pool");
    synth_cmd->add_option("--out", synth.out, "Output directory")->required();
    synth_cmd->add_option("--config", synth.config_path,
                          "Synthetic config file (default: $AXILAB_CONFIG)");
    std::uint64_t seed_value = 0;
    auto* seed_opt = synth_cmd->add_option("--seed", seed_value, "Generator seed");
    std::string start_value, end_value;
    auto* start_opt = synth_cmd->add_option("--start", start_value, "Span start (YYYY-MM-DD)");
    auto* end_opt = synth_cmd->add_option("--end", end_value, "Span end (YYYY-MM-DD)");
    synth_cmd->add_option("--stress", synth.stress,
                          "Stress window start,end,lt_mult,st_vol_mult (repeatable)");

    // --- index ---
    IndexArgs index_args;
    auto* index_cmd = app.add_subcommand("index", "Compute daily spreads and rolling indices");
    index_cmd->add_option("--in", index_args.in, "Transaction CSV")->required();
    index_cmd->add_option("--out", index_args.out, "Output directory")->required();
    index_cmd->add_option("--scope", index_args.scope, "axi, fxi or both")
        ->check(CLI::IsMember({"axi", "fxi", "both"}));
    index_cmd->add_option("--window", index_args.window, "Rolling window (business days)");
    index_cmd->add_option("--holidays", index_args.holidays, "Holiday list file");
    index_cmd->add_option("--risk-free-curve", index_args.risk_free_curve,
                          "Curve CSV (tenor_years,rate_pct); treats the spread column as "
                          "outright rates and nets out the matched-tenor risk-free rate");
    index_cmd->add_flag("--emit-fallback", index_args.emit_fallback,
                        "Emit the fallback series (requires --scope both)");
    double min_volume_value = 0.0;
    auto* min_volume_opt = index_cmd->add_option(
        "--min-volume", min_volume_value,
        "Fallback volume threshold in USD (default: half the trailing 21-day median)");

    // --- rates ---
    auto* rates_cmd = app.add_subcommand("rates", "Build reference-rate series");
    rates_cmd->require_subcommand(1);
    struct {
        std::string in, out, reference, index, target, base, name;
        int window_compound = 30;
        int window_simple = 21;
        double spread = 1.0;
        double sensitivity = 1.0;
        double spread_bp = 11.48;
    } rates;
    auto* compound_cmd = rates_cmd->add_subcommand("compound", "Compounded average, ACT/360");
    compound_cmd->add_option("--in", rates.in, "Overnight rate CSV")->required();
    compound_cmd->add_option("--out", rates.out, "Output directory")->required();
    compound_cmd->add_option("--window", rates.window_compound, "Window in calendar days");
    auto* simple_cmd = rates_cmd->add_subcommand("simple", "Simple rolling average");
    simple_cmd->add_option("--in", rates.in, "Series CSV")->required();
    simple_cmd->add_option("--out", rates.out, "Output directory")->required();
    simple_cmd->add_option("--window", rates.window_simple, "Window in observations");
    auto* gap_cmd = rates_cmd->add_subcommand("gap", "Simple minus compounded average");
    gap_cmd->add_option("--in", rates.in, "Daily spread CSV")->required();
    gap_cmd->add_option("--out", rates.out, "Output directory")->required();
    gap_cmd->add_option("--simple-window", rates.window_simple, "Simple window (observations)");
    gap_cmd->add_option("--compound-window", rates.window_compound,
                        "Compound window (calendar days)");
    auto* composite_cmd =
        rates_cmd->add_subcommand("composite", "reference + spread + c * index");
    composite_cmd->add_option("--reference", rates.reference, "Reference rate CSV")->required();
    composite_cmd->add_option("--index", rates.index, "Credit-spread index CSV")->required();
    composite_cmd->add_option("--out", rates.out, "Output directory")->required();
    composite_cmd->add_option("--spread", rates.spread, "Fixed spread, percent");
    composite_cmd->add_option("--sensitivity", rates.sensitivity, "Credit sensitivity c");
    composite_cmd->add_option("--name", rates.name, "Output series name");
    auto* calibrate_cmd = rates_cmd->add_subcommand(
        "calibrate", "Spread making base income-equivalent to target");
    calibrate_cmd->add_option("--target", rates.target, "Target series CSV")->required();
    calibrate_cmd->add_option("--base", rates.base, "Base series CSV")->required();
    calibrate_cmd->add_option("--out", rates.out, "Output directory")->required();
    auto* proxy_cmd = rates_cmd->add_subcommand("proxy", "Term rate plus fallback spread");
    proxy_cmd->add_option("--in", rates.in, "Term rate CSV")->required();
    proxy_cmd->add_option("--out", rates.out, "Output directory")->required();
    proxy_cmd->add_option("--spread-bp", rates.spread_bp, "Fallback spread in basis points");

    // --- loan ---
    LoanArgs loan;
    auto* loan_cmd = app.add_subcommand("loan", "Loan profitability under alternative indexing");
    loan_cmd->add_option("--funding", loan.funding, "True funding cost series CSV")->required();
    loan_cmd->add_option("--scheme", loan.schemes, "NAME=FILE (repeatable; first is baseline)")
        ->required();
    loan_cmd->add_option("--anchor", loan.anchors, "NAME=DATE stress anchor (repeatable)")
        ->required();
    loan_cmd->add_option("--horizons", loan.horizons, "Comma-separated horizon months");
    loan_cmd->add_option("--notional", loan.notional, "Loan notional in USD");
    loan_cmd->add_option("--out", loan.out, "Output directory")->required();
    loan_cmd->add_option("--format", loan.format, "csv, table or json")
        ->check(CLI::IsMember({"csv", "table", "json"}));

    // --- risk ---
    auto* risk_cmd = app.add_subcommand("risk", "Risk-adjusted-return analytics");
    risk_cmd->require_subcommand(1);
    RiskCurveArgs curve;
    auto* curve_cmd = risk_cmd->add_subcommand("curve", "Spread-discount curve over c");
    curve_cmd->add_option("--out", curve.out, "Output directory")->required();
    curve_cmd->add_option("--spread", curve.spread, "SOFR-only fixed spread, percent");
    curve_cmd->add_option("--c-step", curve.c_step, "Sensitivity grid step");
    curve_cmd->add_option("--mean-axi", curve.params.mean_index, "Mean index, percent");
    curve_cmd->add_option("--sigma-axi", curve.params.sigma_index, "Index volatility, percent");
    curve_cmd->add_option("--mean-delta", curve.params.mean_delta, "Mean deviation, percent");
    curve_cmd->add_option("--sigma-delta", curve.params.sigma_delta,
                          "Deviation volatility, percent");
    curve_cmd->add_option("--elasticity", curve.elasticity, "Loan demand price elasticity");
    curve_cmd->add_option("--format", curve.format, "csv, table or json")
        ->check(CLI::IsMember({"csv", "table", "json"}));

    struct {
        double spread = 1.0;
        double sensitivity = 0.7;
        risk_analytics::RarParams params;
        std::string out;
    } rar;
    auto* rar_cmd = risk_cmd->add_subcommand("rar", "Expected risk-adjusted return");
    rar_cmd->add_option("--spread", rar.spread, "Fixed spread, percent");
    rar_cmd->add_option("--sensitivity", rar.sensitivity, "Credit sensitivity c");
    rar_cmd->add_option("--mean-axi", rar.params.mean_index, "Mean index, percent");
    rar_cmd->add_option("--sigma-axi", rar.params.sigma_index, "Index volatility, percent");
    rar_cmd->add_option("--sigma-delta", rar.params.sigma_delta,
                        "Deviation volatility, percent");
    rar_cmd->add_option("--out", rar.out, "Output directory")->required();

    struct {
        std::string decomposition;
        bool raw_volume = false;
        std::string out;
    } sigma;
    auto* sigma_cmd =
        risk_cmd->add_subcommand("sigma-delta", "Two-point deviation volatility estimate");
    sigma_cmd->add_option("--decomposition", sigma.decomposition, "Decomposition CSV")
        ->required();
    sigma_cmd->add_flag("--raw-volume-shares", sigma.raw_volume,
                        "Use raw dollar shares instead of maturity-weighted ones");
    sigma_cmd->add_option("--out", sigma.out, "Output directory")->required();

    struct {
        double discount = 0.48;
        double elasticity = 25.0;
        std::string out;
    } demand;
    auto* demand_cmd = risk_cmd->add_subcommand("demand", "Demand impact of a spread discount");
    demand_cmd->add_option("--discount", demand.discount, "Spread discount, percent");
    demand_cmd->add_option("--elasticity", demand.elasticity, "Price elasticity");
    demand_cmd->add_option("--out", demand.out, "Output directory")->required();

    // --- stats ---
    StatsArgs stats;
    auto* stats_cmd = app.add_subcommand("stats", "Lagged correlations and Granger tests");
    stats_cmd->add_option("--x", stats.x, "Index series CSV")->required();
    stats_cmd->add_option("--x-transform", stats.x_transform, "none, difference, log_difference");
    stats_cmd->add_option("--y", stats.y, "Single indicator CSV");
    stats_cmd->add_option("--y-transform", stats.y_transform, "Transform for --y");
    stats_cmd->add_option("--indicators", stats.indicators,
                          "Indicator manifest: name,path,transform per line");
    stats_cmd->add_option("--frequency", stats.frequency, "daily, weekly, monthly, quarterly");
    stats_cmd->add_option("--lags", stats.lags, "Max correlation lag");
    stats_cmd->add_flag("--granger", stats.granger, "Run Granger tests in both directions");
    stats_cmd->add_option("--granger-lags", stats.granger_lags, "Granger lag order");
    stats_cmd->add_option("--out", stats.out, "Output directory")->required();
    stats_cmd->add_option("--format", stats.format, "csv, table or json")
        ->check(CLI::IsMember({"csv", "table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (*synth_cmd) {
            if (*seed_opt)
                synth.seed = seed_value;
            if (*start_opt)
                synth.start = start_value;
            if (*end_opt)
                synth.end = end_value;
            return run_synth(synth);
        }
        if (*index_cmd) {
            if (*min_volume_opt)
                index_args.min_volume = min_volume_value;
            return run_index(index_args);
        }
        if (*rates_cmd) {
            std::vector<std::string> warnings;
            const fs::path dir = ensure_out_dir(rates.out);
            if (*compound_cmd) {
                Manifest manifest("rates compound");
                manifest.add("input", rates.in);
                manifest.add("window_calendar_days", rates.window_compound);
                const Series result = rate_builder::compounded_average(
                    load_series(rates.in, warnings), rates.window_compound);
                print_warnings(warnings);
                return write_rate_output(result, dir, "compound_average", manifest);
            }
            if (*simple_cmd) {
                Manifest manifest("rates simple");
                manifest.add("input", rates.in);
                manifest.add("window_observations", rates.window_simple);
                const Series result = rate_builder::simple_rolling_average(
                    load_series(rates.in, warnings), rates.window_simple);
                print_warnings(warnings);
                return write_rate_output(result, dir, "simple_average", manifest);
            }
            if (*gap_cmd) {
                Manifest manifest("rates gap");
                manifest.add("input", rates.in);
                manifest.add("simple_window", rates.window_simple);
                manifest.add("compound_window", rates.window_compound);
                const Series result = rate_builder::averaging_method_gap(
                    load_series(rates.in, warnings), rates.window_simple, rates.window_compound);
                print_warnings(warnings);
                return write_rate_output(result, dir, "averaging_gap", manifest);
            }
            if (*composite_cmd) {
                Manifest manifest("rates composite");
                manifest.add("input.reference", rates.reference);
                manifest.add("input.index", rates.index);
                manifest.add("spread_pct", rates.spread);
                manifest.add("sensitivity", rates.sensitivity);
                const Series result = rate_builder::credit_sensitive_rate(
                    {rates.spread, rates.sensitivity}, load_series(rates.reference, warnings),
                    load_series(rates.index, warnings), rates.name);
                print_warnings(warnings);
                return write_rate_output(result, dir, "composite", manifest);
            }
            if (*calibrate_cmd) {
                Manifest manifest("rates calibrate");
                manifest.add("input.target", rates.target);
                manifest.add("input.base", rates.base);
                const double spread = rate_builder::calibrate_equivalent_spread(
                    load_series(rates.target, warnings), load_series(rates.base, warnings));
                manifest.add("equivalent_spread_pct", spread);
                axilab::Report report;
                report.columns = {"equivalent_spread_pct"};
                report.rows.push_back({fmt(spread)});
                for (const auto& path :
                     axilab::emit_report(report, dir, "calibration", axilab::ReportFormat::csv))
                    manifest.add_output(path);
                manifest.write(dir);
                print_warnings(warnings);
                std::cout << "equivalent spread: " << fmt(spread, 4) << "%\n";
                return 0;
            }
            if (*proxy_cmd) {
                Manifest manifest("rates proxy");
                manifest.add("input", rates.in);
                manifest.add("spread_bp", rates.spread_bp);
                const Series result =
                    rate_builder::libor_proxy(load_series(rates.in, warnings), rates.spread_bp);
                print_warnings(warnings);
                return write_rate_output(result, dir, "proxy", manifest);
            }
        }
        if (*loan_cmd)
            return run_loan(loan);
        if (*risk_cmd) {
            if (*curve_cmd)
                return run_risk_curve(curve);
            if (*rar_cmd) {
                const fs::path dir = ensure_out_dir(rar.out);
                const double value = risk_analytics::risk_adjusted_return(
                    {rar.spread, rar.sensitivity}, rar.params);
                Manifest manifest("risk rar");
                manifest.add("spread_pct", rar.spread);
                manifest.add("sensitivity", rar.sensitivity);
                manifest.add("rar", value);
                axilab::Report report;
                report.columns = {"spread_pct", "sensitivity", "rar"};
                report.rows.push_back({fmt(rar.spread), fmt(rar.sensitivity), fmt(value)});
                for (const auto& path :
                     axilab::emit_report(report, dir, "rar", axilab::ReportFormat::csv))
                    manifest.add_output(path);
                manifest.write(dir);
                std::cout << "risk-adjusted return: " << fmt(value, 4) << "\n";
                return 0;
            }
            if (*sigma_cmd) {
                const fs::path dir = ensure_out_dir(sigma.out);
                const auto days = data_io::parse_decompositions(fs::path(sigma.decomposition));
                const auto mode = sigma.raw_volume
                                      ? risk_analytics::DeltaWeightMode::raw_volume
                                      : risk_analytics::DeltaWeightMode::maturity_weighted;
                const double estimate = risk_analytics::sigma_delta_estimate(days, mode);
                Manifest manifest("risk sigma-delta");
                manifest.add("input.decomposition", sigma.decomposition);
                manifest.add("mode", sigma.raw_volume ? "raw_volume" : "maturity_weighted");
                manifest.add("sigma_delta_pct", estimate);
                axilab::Report report;
                report.columns = {"mode", "sigma_delta_pct", "days"};
                report.rows.push_back({sigma.raw_volume ? "raw_volume" : "maturity_weighted",
                                       fmt(estimate), std::to_string(days.size())});
                for (const auto& path :
                     axilab::emit_report(report, dir, "sigma_delta", axilab::ReportFormat::csv))
                    manifest.add_output(path);
                manifest.write(dir);
                std::cout << "sigma(Delta) estimate: " << fmt(estimate, 4) << "%\n";
                return 0;
            }
            if (*demand_cmd) {
                const fs::path dir = ensure_out_dir(demand.out);
                const double impact =
                    risk_analytics::demand_impact(demand.discount, demand.elasticity);
                Manifest manifest("risk demand");
                manifest.add("discount_pct", demand.discount);
                manifest.add("elasticity", demand.elasticity);
                manifest.add("demand_impact_pct", impact);
                axilab::Report report;
                report.columns = {"discount_pct", "elasticity", "demand_impact_pct"};
                report.rows.push_back(
                    {fmt(demand.discount), fmt(demand.elasticity), fmt(impact)});
                for (const auto& path :
                     axilab::emit_report(report, dir, "demand", axilab::ReportFormat::csv))
                    manifest.add_output(path);
                manifest.write(dir);
                std::cout << "demand impact: " << fmt(impact, 2) << "%\n";
                return 0;
            }
        }
        if (*stats_cmd)
            return run_stats(stats);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
