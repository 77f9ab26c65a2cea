#pragma once

#include "flexigen/config.hpp"

namespace flexigen {

// The simulated year has 365 days with real Gregorian month lengths
// (February always 28). Day 0 is January 1st; its ISO weekday comes from
// cfg.start_weekday. Later years roll the weekday forward naturally
// (365 mod 7 == 1).
struct DateInfo {
    int day_index = 0;  // 0-based day since generation start
    int month = 1;      // 1..12
    int day_of_month = 1;
    int weekday = 1;    // ISO: 1 = Monday .. 7 = Sunday
    bool holiday = false;
    int day_type = 1;   // weekday number, or 8 for holidays

    bool weekend_or_holiday() const { return weekday >= 6 || holiday; }
};

inline constexpr int kDaysPerYear = 365;

// Month (1..12) and day-of-month for a 0-based day of year.
MonthDay month_day_of(int day_of_year);

DateInfo date_info(int day_index, const GenerationConfig& cfg);

// 8 for configured holidays, ISO weekday otherwise.
int day_type_of(int day_index, const GenerationConfig& cfg);

}  // namespace flexigen
