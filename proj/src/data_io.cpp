#include "axi/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "axi/errors.hpp"

namespace axi::data_io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

/// Reads one line, dropping a UTF-8 byte-order mark on the file's first line.
bool read_line(std::istream& in, std::string& line, std::size_t& line_no) {
    if (!std::getline(in, line))
        return false;
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0)
        line.erase(0, 3);
    return true;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t begin = 0;
    while (true) {
        const auto comma = line.find(',', begin);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(begin)));
            break;
        }
        fields.push_back(trim(line.substr(begin, comma - begin)));
        begin = comma + 1;
    }
    return fields;
}

std::string location(const std::string& source, std::size_t line, std::size_t column) {
    return source + ": line " + std::to_string(line) + ", column " + std::to_string(column);
}

double parse_double(const std::string& field, const std::string& source, std::size_t line,
                    std::size_t column) {
    const std::string text = trim(field);
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ValidationError("not a number '" + field + "' at " +
                              location(source, line, column));
    return value;
}

/// Shortest representation that parses back to the identical double.
std::string format_double(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

Date parse_date_field(const std::string& field, const std::string& source, std::size_t line,
                      std::size_t column) {
    try {
        return Date::parse(field);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + " at " + location(source, line, column));
    }
}

} // namespace

TransactionParseResult parse_transactions(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ValidationError("cannot open transaction file '" + file.string() + "'");
    return parse_transactions(in, file.string());
}

TransactionParseResult parse_transactions(std::istream& in, const std::string& source_name) {
    TransactionParseResult result;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;

    while (read_line(in, line, line_no)) {
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#')
            continue;
        if (!header_seen) {
            if (trimmed != kTransactionHeader)
                throw ValidationError("unexpected header '" + trimmed + "' in " + source_name +
                                      " (expected '" + kTransactionHeader + "')");
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(trimmed);
        if (fields.size() != 5)
            throw ValidationError("expected 5 fields, got " + std::to_string(fields.size()) +
                                  " at " + location(source_name, line_no, 1));

        Transaction tx;
        tx.trade_date = parse_date_field(fields[0], source_name, line_no, 1);
        tx.maturity = parse_double(fields[1], source_name, line_no, 2);
        tx.volume = parse_double(fields[2], source_name, line_no, 3);
        tx.spread = parse_double(fields[3], source_name, line_no, 4);
        if (!(tx.maturity > 0.0))
            throw ValidationError("maturity must be positive at " +
                                  location(source_name, line_no, 2));
        if (tx.volume < 0.0)
            throw ValidationError("volume must be nonnegative at " +
                                  location(source_name, line_no, 3));
        if (!std::isfinite(tx.spread))
            throw ValidationError("spread must be finite at " +
                                  location(source_name, line_no, 4));
        if (fields[4] == "bank")
            tx.scope = Scope::bank;
        else if (fields[4] == "nonbank")
            tx.scope = Scope::nonbank;
        else
            throw ValidationError("unknown scope tag '" + fields[4] + "' at " +
                                  location(source_name, line_no, 5));
        result.transactions.push_back(tx);
    }

    if (!header_seen)
        throw ValidationError("missing header in " + source_name);
    if (result.transactions.empty())
        result.warnings.push_back(source_name + ": no transaction rows");
    return result;
}

void write_transactions(const std::filesystem::path& file, std::span<const Transaction> txs,
                        const std::vector<std::string>& comments) {
    std::ofstream out(file);
    if (!out)
        throw ValidationError("cannot write transaction file '" + file.string() + "'");
    write_transactions(out, txs, comments);
}

void write_transactions(std::ostream& out, std::span<const Transaction> txs,
                        const std::vector<std::string>& comments) {
    for (const auto& comment : comments)
        out << "# " << comment << "\n";
    out << kTransactionHeader << "\n";
    for (const auto& tx : txs)
        out << tx.trade_date.to_string() << ',' << format_double(tx.maturity) << ','
            << format_double(tx.volume) << ',' << format_double(tx.spread) << ','
            << to_string(tx.scope) << "\n";
}

SeriesParseResult parse_series(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ValidationError("cannot open series file '" + file.string() + "'");
    auto result = parse_series(in, file.string());
    if (result.series.name().empty())
        result.series.set_name(file.stem().string());
    return result;
}

SeriesParseResult parse_series(std::istream& in, const std::string& source_name) {
    SeriesParseResult result;
    bool kind_seen = false;
    bool header_seen = false;
    std::string name;

    std::vector<SeriesPoint> points;
    std::string line;
    std::size_t line_no = 0;
    while (read_line(in, line, line_no)) {
        std::string trimmed = trim(line);
        if (trimmed.empty())
            continue;
        if (trimmed.front() == '#') {
            const std::string body = trim(trimmed.substr(1));
            if (body.rfind("kind:", 0) == 0) {
                const std::string value = trim(body.substr(5));
                const auto kind = series_kind_from_string(value);
                if (!kind)
                    throw ValidationError("unknown series kind '" + value + "' in " +
                                          source_name);
                result.series.set_kind(*kind);
                kind_seen = true;
            } else if (body.rfind("name:", 0) == 0) {
                name = trim(body.substr(5));
            }
            continue;
        }
        if (!header_seen) {
            if (trimmed != kSeriesHeader)
                throw ValidationError("unexpected header '" + trimmed + "' in " + source_name +
                                      " (expected '" + kSeriesHeader + "')");
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(trimmed);
        if (fields.size() != 2)
            throw ValidationError("expected 2 fields, got " + std::to_string(fields.size()) +
                                  " at " + location(source_name, line_no, 1));
        const Date date = parse_date_field(fields[0], source_name, line_no, 1);
        const double value = parse_double(fields[1], source_name, line_no, 2);
        if (!std::isfinite(value))
            throw ValidationError("value must be finite at " +
                                  location(source_name, line_no, 2));
        points.push_back({date, value});
    }
    if (!header_seen)
        throw ValidationError("missing header in " + source_name);

    std::stable_sort(points.begin(), points.end(),
                     [](const SeriesPoint& a, const SeriesPoint& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].date == points[i - 1].date)
            throw ValidationError("duplicate date " + points[i].date.to_string() + " in " +
                                  source_name);

    if (!kind_seen) {
        result.series.set_kind(SeriesKind::composite);
        result.warnings.push_back(source_name + ": no '# kind:' header, assuming composite");
    }
    result.series.set_name(name);
    for (const auto& p : points)
        result.series.append(p.date, p.value);
    return result;
}

void write_series(const std::filesystem::path& file, const Series& series) {
    std::ofstream out(file);
    if (!out)
        throw ValidationError("cannot write series file '" + file.string() + "'");
    write_series(out, series);
}

void write_series(std::ostream& out, const Series& series) {
    out << "# kind: " << to_string(series.kind()) << "\n";
    if (!series.name().empty())
        out << "# name: " << series.name() << "\n";
    out << kSeriesHeader << "\n";
    for (const auto& p : series.points())
        out << p.date.to_string() << ',' << format_double(p.value) << "\n";
}

index_engine::RiskFreeCurve parse_curve(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ValidationError("cannot open curve file '" + file.string() + "'");
    return parse_curve(in, file.string());
}

index_engine::RiskFreeCurve parse_curve(std::istream& in, const std::string& source_name) {
    std::vector<index_engine::RiskFreeCurve::Point> points;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (read_line(in, line, line_no)) {
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#')
            continue;
        if (!header_seen) {
            if (trimmed != "tenor_years,rate_pct")
                throw ValidationError("unexpected header '" + trimmed + "' in " + source_name +
                                      " (expected 'tenor_years,rate_pct')");
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(trimmed);
        if (fields.size() != 2)
            throw ValidationError("expected 2 fields at " + location(source_name, line_no, 1));
        points.push_back({parse_double(fields[0], source_name, line_no, 1),
                          parse_double(fields[1], source_name, line_no, 2)});
    }
    if (!header_seen)
        throw ValidationError("missing header in " + source_name);
    return index_engine::RiskFreeCurve(std::move(points));
}

namespace {

constexpr const char* kDecompositionHeader =
    "date,st_spread_pct,lt1_spread_pct,lt2_spread_pct,lt3_spread_pct,lt4_spread_pct,"
    "st_weight,lt1_weight,lt2_weight,lt3_weight,lt4_weight,daily_spread_pct,"
    "st_volume_usd,lt1_volume_usd,lt2_volume_usd,lt3_volume_usd,lt4_volume_usd,"
    "weighted_avg_maturity_years";

void put_optional(std::ostream& out, double value) {
    if (std::isfinite(value))
        out << format_double(value);
}

double get_optional(const std::string& field, const std::string& source, std::size_t line,
                    std::size_t column) {
    if (field.empty())
        return std::nan("");
    return parse_double(field, source, line, column);
}

} // namespace

void write_decompositions(const std::filesystem::path& file,
                          std::span<const index_engine::DailySpreadDecomposition> days) {
    std::ofstream out(file);
    if (!out)
        throw ValidationError("cannot write decomposition file '" + file.string() + "'");
    write_decompositions(out, days);
}

void write_decompositions(std::ostream& out,
                          std::span<const index_engine::DailySpreadDecomposition> days) {
    out << kDecompositionHeader << "\n";
    for (const auto& d : days) {
        out << d.date.to_string() << ',';
        put_optional(out, d.st_spread);
        for (int j = 0; j < kLtBucketCount; ++j) {
            out << ',';
            put_optional(out, d.lt_spreads[j]);
        }
        out << ',' << format_double(d.st_weight);
        for (int j = 0; j < kLtBucketCount; ++j)
            out << ',' << format_double(d.lt_weights[j]);
        out << ',' << format_double(d.daily_spread);
        out << ',' << format_double(d.st_volume);
        for (int j = 0; j < kLtBucketCount; ++j)
            out << ',' << format_double(d.lt_volumes[j]);
        out << ',' << format_double(d.weighted_avg_maturity) << "\n";
    }
}

std::vector<index_engine::DailySpreadDecomposition>
parse_decompositions(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ValidationError("cannot open decomposition file '" + file.string() + "'");
    return parse_decompositions(in, file.string());
}

std::vector<index_engine::DailySpreadDecomposition>
parse_decompositions(std::istream& in, const std::string& source_name) {
    std::vector<index_engine::DailySpreadDecomposition> out;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (read_line(in, line, line_no)) {
        const std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed.front() == '#')
            continue;
        if (!header_seen) {
            if (trimmed != kDecompositionHeader)
                throw ValidationError("unexpected header in " + source_name);
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(trimmed);
        if (fields.size() != 18)
            throw ValidationError("expected 18 fields, got " + std::to_string(fields.size()) +
                                  " at " + location(source_name, line_no, 1));
        index_engine::DailySpreadDecomposition d;
        d.date = parse_date_field(fields[0], source_name, line_no, 1);
        d.st_spread = get_optional(fields[1], source_name, line_no, 2);
        for (int j = 0; j < kLtBucketCount; ++j)
            d.lt_spreads[j] = get_optional(fields[2 + j], source_name, line_no, 3 + j);
        d.st_weight = parse_double(fields[6], source_name, line_no, 7);
        for (int j = 0; j < kLtBucketCount; ++j)
            d.lt_weights[j] = parse_double(fields[7 + j], source_name, line_no, 8 + j);
        d.daily_spread = parse_double(fields[11], source_name, line_no, 12);
        d.st_volume = parse_double(fields[12], source_name, line_no, 13);
        for (int j = 0; j < kLtBucketCount; ++j)
            d.lt_volumes[j] = parse_double(fields[13 + j], source_name, line_no, 14 + j);
        d.weighted_avg_maturity = parse_double(fields[17], source_name, line_no, 18);
        out.push_back(d);
    }
    if (!header_seen)
        throw ValidationError("missing header in " + source_name);
    return out;
}

// ---------------------------------------------------------------------------
// Synthetic generator
// ---------------------------------------------------------------------------

namespace {

const char* const kBucketKeys[5] = {"st", "lt1", "lt2", "lt3", "lt4"};

/// Draw helpers pinned to one algorithm so fixtures reproduce across
/// platforms: mt19937_64 bits mapped to [0,1) by the top 53 bits, normals
/// via Box-Muller (two fresh uniforms per draw, no caching).
class Draws {
public:
    explicit Draws(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double normal() {
        double u1 = uniform();
        while (u1 == 0.0)
            u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643 * u2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

std::vector<std::string> SyntheticConfig::describe() const {
    std::vector<std::string> out;
    out.push_back(std::string("generator=") + kGeneratorVersion);
    out.push_back("seed=" + std::to_string(seed));
    out.push_back("start=" + start.to_string());
    out.push_back("end=" + end.to_string());
    for (int b = 0; b < 5; ++b) {
        out.push_back(std::string("volume_scale_") + kBucketKeys[b] + "=" +
                      format_double(volume_scale[b]));
        out.push_back(std::string("calm_spread_") + kBucketKeys[b] + "=" +
                      format_double(calm_spread[b]));
        out.push_back(std::string("trades_per_day_") + kBucketKeys[b] + "=" +
                      std::to_string(trades_per_day[b]));
    }
    out.push_back("volume_dispersion=" + format_double(volume_dispersion));
    out.push_back("spread_vol=" + format_double(spread_vol));
    out.push_back("idio_spread_vol=" + format_double(idio_spread_vol));
    out.push_back("mean_reversion=" + format_double(mean_reversion));
    out.push_back("bank_share=" + format_double(bank_share));
    out.push_back("nonbank_spread_offset=" + format_double(nonbank_spread_offset));
    for (const auto& w : stress_windows)
        out.push_back("stress_window=" + w.start.to_string() + "," + w.end.to_string() + "," +
                      format_double(w.lt_spread_multiplier) + "," +
                      format_double(w.st_volume_multiplier));
    return out;
}

SyntheticConfig load_synthetic_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw ValidationError("cannot open config file '" + file.string() + "'");

    SyntheticConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (read_line(in, line, line_no)) {
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        const std::string trimmed = trim(line);
        if (trimmed.empty())
            continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string::npos)
            throw ValidationError("expected key = value at " +
                                  location(file.string(), line_no, 1));
        const std::string key = trim(trimmed.substr(0, eq));
        const std::string value = trim(trimmed.substr(eq + 1));
        const auto num = [&] { return parse_double(value, file.string(), line_no, 2); };

        bool matched = true;
        if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(num());
        } else if (key == "start") {
            config.start = parse_date_field(value, file.string(), line_no, 2);
        } else if (key == "end") {
            config.end = parse_date_field(value, file.string(), line_no, 2);
        } else if (key == "volume_dispersion") {
            config.volume_dispersion = num();
        } else if (key == "spread_vol") {
            config.spread_vol = num();
        } else if (key == "idio_spread_vol") {
            config.idio_spread_vol = num();
        } else if (key == "mean_reversion") {
            config.mean_reversion = num();
        } else if (key == "bank_share") {
            config.bank_share = num();
        } else if (key == "nonbank_spread_offset") {
            config.nonbank_spread_offset = num();
        } else if (key == "stress_window") {
            const auto fields = split_fields(value);
            if (fields.size() != 4)
                throw ValidationError("stress_window needs start,end,lt_mult,st_vol_mult at " +
                                      location(file.string(), line_no, 2));
            StressWindow w;
            w.start = parse_date_field(fields[0], file.string(), line_no, 2);
            w.end = parse_date_field(fields[1], file.string(), line_no, 3);
            w.lt_spread_multiplier = parse_double(fields[2], file.string(), line_no, 4);
            w.st_volume_multiplier = parse_double(fields[3], file.string(), line_no, 5);
            config.stress_windows.push_back(w);
        } else {
            matched = false;
        }
        if (!matched) {
            for (int b = 0; b < 5 && !matched; ++b) {
                if (key == std::string("volume_scale_") + kBucketKeys[b]) {
                    config.volume_scale[b] = num();
                    matched = true;
                } else if (key == std::string("calm_spread_") + kBucketKeys[b]) {
                    config.calm_spread[b] = num();
                    matched = true;
                } else if (key == std::string("trades_per_day_") + kBucketKeys[b]) {
                    config.trades_per_day[b] = static_cast<int>(num());
                    matched = true;
                }
            }
        }
        if (!matched)
            throw ValidationError("unknown config key '" + key + "' at " +
                                  location(file.string(), line_no, 1));
    }
    return config;
}

std::vector<Transaction> generate_synthetic(const SyntheticConfig& config) {
    if (config.end < config.start)
        throw ValidationError("synthetic span is empty (end before start)");
    for (const auto& w : config.stress_windows) {
        if (!(w.lt_spread_multiplier > 0.0) || !(w.st_volume_multiplier > 0.0))
            throw ValidationError("stress multipliers must be positive");
        if (w.end < w.start || w.start < config.start || w.end > config.end)
            throw ValidationError("stress window " + w.start.to_string() + ".." +
                                  w.end.to_string() + " falls outside the span");
    }
    for (int b = 0; b < 5; ++b)
        if (config.trades_per_day[b] < 0 || config.volume_scale[b] < 0.0)
            throw ValidationError("per-bucket scales must be nonnegative");

    const BusinessCalendar calendar; // plain weekday calendar
    const double maturity_lo[5] = {0.02, 1.0, 2.0, 3.0, 4.0};
    const double maturity_hi[5] = {1.0, 2.0, 3.0, 4.0, 5.0};

    Draws draws(config.seed);
    std::array<double, 5> level = config.calm_spread;
    std::vector<Transaction> out;

    for (Date d = config.start; d <= config.end; d += 1) {
        if (!calendar.is_business_day(d))
            continue;

        const StressWindow* stress = nullptr;
        for (const auto& w : config.stress_windows)
            if (w.start <= d && d <= w.end)
                stress = &w;

        for (int b = 0; b < 5; ++b) {
            level[b] += config.mean_reversion * (config.calm_spread[b] - level[b]) +
                        config.spread_vol * draws.normal();
            level[b] = std::max(level[b], 0.005);
        }

        for (int b = 0; b < 5; ++b) {
            const int trades = config.trades_per_day[b];
            if (trades == 0 || config.volume_scale[b] == 0.0)
                continue;
            const double mean_size = config.volume_scale[b] / trades;
            const bool is_lt = b > 0;
            double level_multiplier = 1.0;
            double volume_multiplier = 1.0;
            if (stress) {
                if (is_lt)
                    level_multiplier = stress->lt_spread_multiplier;
                else
                    volume_multiplier = stress->st_volume_multiplier;
            }
            for (int i = 0; i < trades; ++i) {
                Transaction tx;
                tx.trade_date = d;
                tx.maturity = maturity_lo[b] +
                              draws.uniform() * (maturity_hi[b] - maturity_lo[b]);
                const double sigma = config.volume_dispersion;
                tx.volume = mean_size * volume_multiplier *
                            std::exp(sigma * draws.normal() - 0.5 * sigma * sigma);
                tx.spread = level[b] * level_multiplier +
                            config.idio_spread_vol * draws.normal();
                if (draws.uniform() < config.bank_share) {
                    tx.scope = Scope::bank;
                } else {
                    tx.scope = Scope::nonbank;
                    tx.spread += config.nonbank_spread_offset;
                }
                out.push_back(tx);
            }
        }
    }
    return out;
}

} // namespace axi::data_io
