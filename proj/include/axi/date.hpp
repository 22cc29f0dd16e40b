#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace axi {

/// Calendar date stored as days since 1970-01-01.
///
/// Cheap to copy and compare; conversions to year/month/day go through
/// std::chrono's proleptic Gregorian calendar.
class Date {
public:
    Date() = default;
    constexpr explicit Date(int serial) : serial_(serial) {}
    Date(int year, unsigned month, unsigned day);

    /// Parses "YYYY-MM-DD"; throws ValidationError on malformed input.
    static Date parse(const std::string& iso);

    int serial() const { return serial_; }
    std::string to_string() const;

    int year() const;
    unsigned month() const;
    unsigned day() const;

    /// ISO weekday, 1 = Monday .. 7 = Sunday.
    int iso_weekday() const;
    bool is_weekend() const { return iso_weekday() >= 6; }

    Date operator+(int days) const { return Date(serial_ + days); }
    Date operator-(int days) const { return Date(serial_ - days); }
    int operator-(Date other) const { return serial_ - other.serial_; }
    Date& operator+=(int days) { serial_ += days; return *this; }
    auto operator<=>(const Date&) const = default;

    /// Same day-of-month n months later, clamped to the target month's end
    /// (2020-01-31 + 1 month = 2020-02-29).
    Date add_months(int months) const;

    /// Last calendar day of this date's month.
    Date month_end() const;
    /// Last calendar day of this date's quarter.
    Date quarter_end() const;
    /// Sunday closing this date's ISO week.
    Date iso_week_end() const;

private:
    std::chrono::year_month_day ymd() const;
    int serial_ = 0;
};

/// Weekday calendar minus an explicit holiday list.
class BusinessCalendar {
public:
    BusinessCalendar() = default;
    explicit BusinessCalendar(std::vector<Date> holidays);

    /// Loads one ISO date per line; '#' starts a comment.
    static BusinessCalendar from_file(const std::string& path);

    bool is_business_day(Date d) const;
    Date next_business_day(Date d) const;

    /// All business days in [first, last].
    std::vector<Date> business_days(Date first, Date last) const;

    std::string id() const { return holidays_.empty() ? "weekday" : "weekday-custom"; }

private:
    std::set<Date> holidays_;
};

} // namespace axi
