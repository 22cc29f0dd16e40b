#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "axi/date.hpp"

namespace axi {

/// What a series measures. `index` marks credit-spread indices (AXI, FXI),
/// `macro` marks general indicator inputs; the remaining kinds follow the
/// rate CSV schema's `# kind:` header.
enum class SeriesKind {
    overnight,
    average_30d_compound,
    average_21bd_simple,
    composite,
    libor,
    proxy,
    index,
    macro,
};

std::string to_string(SeriesKind kind);
std::optional<SeriesKind> series_kind_from_string(const std::string& text);

struct SeriesPoint {
    Date date;
    double value = 0.0; // percent per annum unless the series is a macro indicator
};

/// Dated sequence of values with strictly increasing dates.
///
/// Serves both index series (AXI, FXI) and rate series; `kind` tells them
/// apart. All rate-like values are percent per annum.
class Series {
public:
    Series() = default;
    Series(std::string name, SeriesKind kind) : name_(std::move(name)), kind_(kind) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    SeriesKind kind() const { return kind_; }
    void set_kind(SeriesKind kind) { kind_ = kind; }
    const std::string& calendar_id() const { return calendar_id_; }
    void set_calendar_id(std::string id) { calendar_id_ = std::move(id); }

    const std::vector<SeriesPoint>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    Date first_date() const { return points_.front().date; }
    Date last_date() const { return points_.back().date; }

    /// Appends a point; throws ValidationError unless the date strictly
    /// follows the current last date.
    void append(Date date, double value);

    /// Value at exactly `date`, if present.
    std::optional<double> value_at(Date date) const;

    /// Most recent value at or before `date`, carried forward at most
    /// `max_carry_days`; nullopt when none qualifies.
    std::optional<double> value_on_or_before(Date date, int max_carry_days) const;

    /// Index of the point at `date`, or npos.
    std::size_t find(Date date) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Arithmetic mean of all values; throws NoDataError when empty.
    double mean() const;

private:
    std::string name_;
    SeriesKind kind_ = SeriesKind::composite;
    std::string calendar_id_ = "weekday";
    std::vector<SeriesPoint> points_;
};

/// Dates present in both series, in increasing order.
std::vector<Date> common_dates(const Series& a, const Series& b);

/// Applies `op` pointwise over the date intersection; the result keeps
/// `name` and `kind`. Throws NoDataError when the intersection is empty.
Series zip_series(const Series& a, const Series& b, std::string name, SeriesKind kind,
                  double (*op)(double, double));

/// Pointwise `value + shift` over the whole series.
Series shift_series(const Series& s, double shift, std::string name);

} // namespace axi
