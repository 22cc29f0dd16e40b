#include "axi/date.hpp"

#include <cstdio>
#include <fstream>

#include "axi/errors.hpp"

namespace axi {

namespace {

std::chrono::sys_days to_sys_days(int serial) {
    return std::chrono::sys_days{std::chrono::days{serial}};
}

} // namespace

Date::Date(int year, unsigned month, unsigned day) {
    const std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                          std::chrono::day{day}};
    // chrono::year is 16-bit; bound to the four-digit ISO range before it
    // can wrap.
    if (year < 1 || year > 9999 || !ymd.ok())
        throw ValidationError("invalid calendar date " + std::to_string(year) + "-" +
                              std::to_string(month) + "-" + std::to_string(day));
    serial_ = std::chrono::sys_days{ymd}.time_since_epoch().count();
}

Date Date::parse(const std::string& iso) {
    int y = 0;
    unsigned m = 0, d = 0;
    char tail = '\0';
    if (std::sscanf(iso.c_str(), "%d-%u-%u%c", &y, &m, &d, &tail) != 3)
        throw ValidationError("malformed date '" + iso + "' (expected YYYY-MM-DD)");
    return Date(y, m, d);
}

std::chrono::year_month_day Date::ymd() const {
    return std::chrono::year_month_day{to_sys_days(serial_)};
}

std::string Date::to_string() const {
    const auto v = ymd();
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(v.year()), unsigned(v.month()),
                  unsigned(v.day()));
    return buf;
}

int Date::year() const { return int(ymd().year()); }
unsigned Date::month() const { return unsigned(ymd().month()); }
unsigned Date::day() const { return unsigned(ymd().day()); }

int Date::iso_weekday() const {
    return int(std::chrono::weekday{to_sys_days(serial_)}.iso_encoding());
}

Date Date::add_months(int months) const {
    auto v = ymd();
    auto shifted = v + std::chrono::months{months};
    if (!shifted.ok())
        shifted = shifted.year() / shifted.month() / std::chrono::last;
    return Date(std::chrono::sys_days{shifted}.time_since_epoch().count());
}

Date Date::month_end() const {
    const auto v = ymd();
    const auto last = v.year() / v.month() / std::chrono::last;
    return Date(std::chrono::sys_days{last}.time_since_epoch().count());
}

Date Date::quarter_end() const {
    const auto v = ymd();
    const unsigned m = unsigned(v.month());
    const unsigned quarter_last_month = ((m - 1) / 3) * 3 + 3;
    const auto last = v.year() / std::chrono::month{quarter_last_month} / std::chrono::last;
    return Date(std::chrono::sys_days{last}.time_since_epoch().count());
}

Date Date::iso_week_end() const { return *this + (7 - iso_weekday()); }

BusinessCalendar::BusinessCalendar(std::vector<Date> holidays)
    : holidays_(holidays.begin(), holidays.end()) {}

BusinessCalendar BusinessCalendar::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open holiday file '" + path + "'");
    std::vector<Date> holidays;
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos)
            continue;
        holidays.push_back(Date::parse(line.substr(start)));
    }
    return BusinessCalendar(std::move(holidays));
}

bool BusinessCalendar::is_business_day(Date d) const {
    return !d.is_weekend() && !holidays_.contains(d);
}

Date BusinessCalendar::next_business_day(Date d) const {
    Date next = d + 1;
    while (!is_business_day(next))
        next += 1;
    return next;
}

std::vector<Date> BusinessCalendar::business_days(Date first, Date last) const {
    std::vector<Date> out;
    for (Date d = first; d <= last; d += 1)
        if (is_business_day(d))
            out.push_back(d);
    return out;
}

} // namespace axi
