#include "aelab/dates.hpp"

#include <cstdio>

namespace aelab {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int mon) {
    static constexpr int lens[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (mon == 2 && is_leap_year(year)) return 29;
    return lens[mon - 1];
}

// Howard Hinnant's days-from-civil algorithm.
long Date::serial() const {
    int y = year;
    const int m = mon;
    const int d = day;
    y -= m <= 2;
    const long era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<long>(doe) - 719468;
}

Date Date::from_serial(long days) {
    days += 719468;
    const long era = (days >= 0 ? days : days - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(days - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const long y = static_cast<long>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp < 10 ? mp + 3 : mp - 9;
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

int Date::weekday() const {
    long s = serial();
    // 1970-01-01 was a Thursday (index 3 with Monday = 0).
    return static_cast<int>(((s % 7) + 7 + 3) % 7);
}

namespace {

int parse_int_field(const std::string& s, size_t pos, size_t len, const std::string& what) {
    if (pos + len > s.size()) throw ParseError("bad " + what + " in '" + s + "'");
    int v = 0;
    for (size_t i = pos; i < pos + len; ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw ParseError("bad " + what + " in '" + s + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

}  // namespace

Month Month::parse(const std::string& s) {
    if (s.size() != 7 || s[4] != '-') throw ParseError("bad month '" + s + "', expected YYYY-MM");
    Month m{parse_int_field(s, 0, 4, "year"), parse_int_field(s, 5, 2, "month")};
    if (m.mon < 1 || m.mon > 12) throw ParseError("bad month '" + s + "'");
    return m;
}

std::string Month::str() const {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, mon);
    return buf;
}

Date Date::parse(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-')
        throw ParseError("bad date '" + s + "', expected YYYY-MM-DD");
    Date d{parse_int_field(s, 0, 4, "year"), parse_int_field(s, 5, 2, "month"),
           parse_int_field(s, 8, 2, "day")};
    if (d.mon < 1 || d.mon > 12 || d.day < 1 || d.day > days_in_month(d.year, d.mon))
        throw ParseError("bad date '" + s + "'");
    return d;
}

std::string Date::str() const {
    char buf[12];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, mon, day);
    return buf;
}

Timestamp Timestamp::parse(const std::string& s) {
    if (s.size() == 10) return Timestamp{Date::parse(s), 0};
    if (s.size() != 19 || (s[10] != 'T' && s[10] != ' '))
        throw ParseError("bad timestamp '" + s + "'");
    Date d = Date::parse(s.substr(0, 10));
    if (s[13] != ':' || s[16] != ':') throw ParseError("bad timestamp '" + s + "'");
    int hh = parse_int_field(s, 11, 2, "hour");
    int mm = parse_int_field(s, 14, 2, "minute");
    int ss = parse_int_field(s, 17, 2, "second");
    if (hh > 23 || mm > 59 || ss > 59) throw ParseError("bad timestamp '" + s + "'");
    return Timestamp{d, hh * 3600 + mm * 60 + ss};
}

std::string Timestamp::str() const {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02d", date.year, date.mon, date.day,
                  sec / 3600, (sec / 60) % 60, sec % 60);
    return buf;
}

}  // namespace aelab
