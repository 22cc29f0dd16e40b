#include "axi/series.hpp"

#include <algorithm>
#include <cmath>

#include "axi/errors.hpp"

namespace axi {

std::string to_string(SeriesKind kind) {
    switch (kind) {
    case SeriesKind::overnight: return "overnight";
    case SeriesKind::average_30d_compound: return "average_30d_compound";
    case SeriesKind::average_21bd_simple: return "average_21bd_simple";
    case SeriesKind::composite: return "composite";
    case SeriesKind::libor: return "libor";
    case SeriesKind::proxy: return "proxy";
    case SeriesKind::index: return "index";
    case SeriesKind::macro: return "macro";
    }
    return "composite";
}

std::optional<SeriesKind> series_kind_from_string(const std::string& text) {
    static const std::pair<const char*, SeriesKind> table[] = {
        {"overnight", SeriesKind::overnight},
        {"average_30d_compound", SeriesKind::average_30d_compound},
        {"average_21bd_simple", SeriesKind::average_21bd_simple},
        {"composite", SeriesKind::composite},
        {"libor", SeriesKind::libor},
        {"proxy", SeriesKind::proxy},
        {"index", SeriesKind::index},
        {"macro", SeriesKind::macro},
    };
    for (const auto& [name, kind] : table)
        if (text == name)
            return kind;
    return std::nullopt;
}

void Series::append(Date date, double value) {
    if (!points_.empty() && date <= points_.back().date)
        throw ValidationError("series '" + name_ + "': date " + date.to_string() +
                              " does not follow " + points_.back().date.to_string());
    if (!std::isfinite(value))
        throw ValidationError("series '" + name_ + "': nonfinite value on " + date.to_string());
    points_.push_back({date, value});
}

std::optional<double> Series::value_at(Date date) const {
    const std::size_t i = find(date);
    return i == npos ? std::nullopt : std::optional<double>(points_[i].value);
}

std::optional<double> Series::value_on_or_before(Date date, int max_carry_days) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), date,
                               [](Date d, const SeriesPoint& p) { return d < p.date; });
    if (it == points_.begin())
        return std::nullopt;
    --it;
    if (date - it->date > max_carry_days)
        return std::nullopt;
    return it->value;
}

std::size_t Series::find(Date date) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), date,
                               [](const SeriesPoint& p, Date d) { return p.date < d; });
    if (it == points_.end() || it->date != date)
        return npos;
    return static_cast<std::size_t>(it - points_.begin());
}

double Series::mean() const {
    if (points_.empty())
        throw NoDataError("mean of empty series '" + name_ + "'");
    double sum = 0.0;
    for (const auto& p : points_)
        sum += p.value;
    return sum / static_cast<double>(points_.size());
}

std::vector<Date> common_dates(const Series& a, const Series& b) {
    std::vector<Date> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Date da = a.points()[i].date;
        const Date db = b.points()[j].date;
        if (da == db) {
            out.push_back(da);
            ++i;
            ++j;
        } else if (da < db) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

Series zip_series(const Series& a, const Series& b, std::string name, SeriesKind kind,
                  double (*op)(double, double)) {
    Series out(std::move(name), kind);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const auto& pa = a.points()[i];
        const auto& pb = b.points()[j];
        if (pa.date == pb.date) {
            out.append(pa.date, op(pa.value, pb.value));
            ++i;
            ++j;
        } else if (pa.date < pb.date) {
            ++i;
        } else {
            ++j;
        }
    }
    if (out.empty())
        throw NoDataError("series '" + a.name() + "' and '" + b.name() +
                          "' share no dates");
    return out;
}

Series shift_series(const Series& s, double shift, std::string name) {
    Series out(std::move(name), s.kind());
    for (const auto& p : s.points())
        out.append(p.date, p.value + shift);
    return out;
}

} // namespace axi
