#pragma once

#include <compare>
#include <string>

namespace tempest {

// Calendar date. Only parsing, ordering and month arithmetic are needed;
// trading calendars come from the data files.
struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31

    auto operator<=>(const Date&) const = default;

    // months since year 0, for J/K month windows
    int month_key() const { return year * 12 + (month - 1); }

    std::string iso() const;        // YYYY-MM-DD
    std::string year_month() const; // YYYY-MM
};

// Strict ISO-8601 parse; throws ParseError on malformed input.
Date parse_date(const std::string& text);

}  // namespace tempest
