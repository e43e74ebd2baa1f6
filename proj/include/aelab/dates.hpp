#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace aelab {

/// Thrown when an input file violates its contract. Carries the 1-based
/// line number when the problem is attributable to a specific row.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when parsed data violates a domain invariant (e.g. return <= -1).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Calendar month, the backbone time unit of the monthly pipeline.
struct Month {
    int year = 0;
    int mon = 1;  // 1..12

    // Months map to a flat index so that windows are plain integer ranges.
    int index() const { return year * 12 + (mon - 1); }
    static Month from_index(int idx) {
        int y = idx >= 0 ? idx / 12 : (idx - 11) / 12;
        return Month{y, idx - y * 12 + 1};
    }
    Month plus(int months) const { return from_index(index() + months); }

    static Month parse(const std::string& s);  // "YYYY-MM"
    std::string str() const;

    friend auto operator<=>(const Month&, const Month&) = default;
};

/// Calendar date with civil-day arithmetic (proleptic Gregorian).
struct Date {
    int year = 0;
    int mon = 1;
    int day = 1;

    long serial() const;  // days since 1970-01-01
    static Date from_serial(long days);
    int weekday() const;  // 0 = Monday .. 6 = Sunday

    Month month() const { return Month{year, mon}; }

    static Date parse(const std::string& s);  // "YYYY-MM-DD"
    std::string str() const;

    friend auto operator<=>(const Date&, const Date&) = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int mon);

/// Trade timestamp: a date plus an intra-day ordering in seconds.
struct Timestamp {
    Date date;
    int sec = 0;  // seconds past midnight

    static Timestamp parse(const std::string& s);  // date, optionally "T"/" " + HH:MM:SS
    std::string str() const;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

}  // namespace aelab
