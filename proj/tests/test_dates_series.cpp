#include <doctest.h>

#include "axi/date.hpp"
#include "axi/errors.hpp"
#include "axi/series.hpp"

using namespace axi;

TEST_CASE("date parsing, formatting and arithmetic") {
    const Date d = Date::parse("2020-02-29");
    CHECK(d.to_string() == "2020-02-29");
    CHECK(d.year() == 2020);
    CHECK(d.month() == 2);
    CHECK(d.day() == 29);
    CHECK_THROWS_AS(Date::parse("2021-02-29"), ValidationError);
    CHECK_THROWS_AS(Date::parse("29/02/2020"), ValidationError);
    CHECK_THROWS_AS(Date::parse("2020-02-29x"), ValidationError);
    CHECK_THROWS_AS(Date::parse("99999-01-01"), ValidationError);
    CHECK_THROWS_AS(Date::parse("0000-01-01"), ValidationError);

    CHECK(Date{2020, 3, 1} - Date{2020, 2, 28} == 2);
    CHECK((Date{2020, 1, 31}.add_months(1)) == Date{2020, 2, 29});
    CHECK((Date{2020, 3, 1}.add_months(3)) == Date{2020, 6, 1});
    CHECK((Date{2023, 11, 30}.add_months(3)) == Date{2024, 2, 29});
    CHECK(Date{2023, 2, 3}.month_end() == Date{2023, 2, 28});
    CHECK(Date{2023, 5, 10}.quarter_end() == Date{2023, 6, 30});
    CHECK(Date{2023, 1, 2}.iso_weekday() == 1);
    CHECK(Date{2023, 1, 2}.iso_week_end() == Date{2023, 1, 8});
    CHECK(Date{2023, 1, 8}.iso_week_end() == Date{2023, 1, 8});
}

TEST_CASE("business calendar skips weekends and holidays") {
    const BusinessCalendar plain;
    CHECK(plain.is_business_day(Date{2023, 1, 2}));
    CHECK(!plain.is_business_day(Date{2023, 1, 7}));
    CHECK(plain.next_business_day(Date{2023, 1, 6}) == Date{2023, 1, 9});
    CHECK(plain.business_days(Date{2023, 1, 2}, Date{2023, 1, 8}).size() == 5);

    const BusinessCalendar with_holiday({Date{2023, 1, 3}});
    CHECK(!with_holiday.is_business_day(Date{2023, 1, 3}));
    CHECK(with_holiday.business_days(Date{2023, 1, 2}, Date{2023, 1, 8}).size() == 4);
}

TEST_CASE("series ordering and lookups") {
    Series s("test", SeriesKind::index);
    s.append(Date{2023, 1, 2}, 1.0);
    s.append(Date{2023, 1, 3}, 2.0);
    CHECK_THROWS_AS(s.append(Date{2023, 1, 3}, 3.0), ValidationError);
    CHECK_THROWS_AS(s.append(Date{2023, 1, 1}, 3.0), ValidationError);

    CHECK(s.value_at(Date{2023, 1, 2}) == 1.0);
    CHECK(!s.value_at(Date{2023, 1, 4}).has_value());
    CHECK(s.value_on_or_before(Date{2023, 1, 6}, 7) == 2.0);
    CHECK(!s.value_on_or_before(Date{2023, 1, 20}, 7).has_value());
    CHECK(!s.value_on_or_before(Date{2023, 1, 1}, 7).has_value());
    CHECK(s.mean() == 1.5);

    Series other("other", SeriesKind::index);
    other.append(Date{2023, 1, 3}, 10.0);
    other.append(Date{2023, 1, 4}, 20.0);
    const auto joint = common_dates(s, other);
    REQUIRE(joint.size() == 1);
    CHECK(joint[0] == Date{2023, 1, 3});

    const Series sum = zip_series(s, other, "sum", SeriesKind::macro,
                                  [](double a, double b) { return a + b; });
    REQUIRE(sum.size() == 1);
    CHECK(sum.points()[0].value == 12.0);

    CHECK(to_string(SeriesKind::overnight) == "overnight");
    CHECK(series_kind_from_string("overnight") == SeriesKind::overnight);
    CHECK(!series_kind_from_string("bogus").has_value());
}
