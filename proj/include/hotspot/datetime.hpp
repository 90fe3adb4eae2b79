#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "hotspot/error.hpp"

namespace hotspot {

// All timestamps are UTC seconds since 1970-01-01T00:00:00Z (int64).
// Calendar days are day numbers since the same epoch.

constexpr std::int64_t kSecondsPerDay = 86400;

struct CivilDate {
    int year;
    unsigned month;  // 1..12
    unsigned day;    // 1..31
};

// Days from civil algorithm (proleptic Gregorian).
constexpr std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

constexpr CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {static_cast<int>(y + (m <= 2)), m, d};
}

// Floored division/modulo so pre-1970 timestamps bucket correctly.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

constexpr std::int64_t day_of_time(std::int64_t utc_seconds) { return floor_div(utc_seconds, kSecondsPerDay); }
constexpr std::int64_t day_start(std::int64_t day) { return day * kSecondsPerDay; }
constexpr std::int64_t day_end(std::int64_t day) { return day * kSecondsPerDay + kSecondsPerDay - 1; }

namespace detail {
inline bool parse_fixed_uint(std::string_view s, std::size_t pos, std::size_t len, long& out) {
    long v = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

inline bool valid_civil(long y, long mo, long d) {
    if (mo < 1 || mo > 12 || d < 1) return false;
    static constexpr int mdays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    long dmax = mdays[mo - 1];
    if (mo == 2 && ((y % 4 == 0 && y % 100 != 0) || y % 400 == 0)) dmax = 29;
    return d <= dmax;
}
}  // namespace detail

// "YYYY-MM-DD" -> day number.
inline std::optional<std::int64_t> parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
    long y, mo, d;
    if (!detail::parse_fixed_uint(s, 0, 4, y) || !detail::parse_fixed_uint(s, 5, 2, mo) ||
        !detail::parse_fixed_uint(s, 8, 2, d))
        return std::nullopt;
    if (!detail::valid_civil(y, mo, d)) return std::nullopt;
    return days_from_civil(static_cast<int>(y), static_cast<unsigned>(mo), static_cast<unsigned>(d));
}

// "YYYY-MM-DDThh:mm:ssZ" -> UTC seconds.
inline std::optional<std::int64_t> parse_datetime(std::string_view s) {
    if (s.size() != 20 || s[10] != 'T' || s[13] != ':' || s[16] != ':' || s[19] != 'Z') return std::nullopt;
    const auto day = parse_date(s.substr(0, 10));
    if (!day) return std::nullopt;
    long h, mi, sec;
    if (!detail::parse_fixed_uint(s, 11, 2, h) || !detail::parse_fixed_uint(s, 14, 2, mi) ||
        !detail::parse_fixed_uint(s, 17, 2, sec))
        return std::nullopt;
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;  // allow leap-second notation
    return day_start(*day) + h * 3600 + mi * 60 + sec;
}

inline std::string format_date(std::int64_t day) {
    const CivilDate c = civil_from_days(day);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", c.year, c.month, c.day);
    return buf;
}

inline std::string format_datetime(std::int64_t utc_seconds) {
    const std::int64_t day = day_of_time(utc_seconds);
    const std::int64_t sod = floor_mod(utc_seconds, kSecondsPerDay);
    const CivilDate c = civil_from_days(day);
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02dZ", c.year, c.month, c.day,
                  static_cast<int>(sod / 3600), static_cast<int>((sod / 60) % 60), static_cast<int>(sod % 60));
    return buf;
}

}  // namespace hotspot
