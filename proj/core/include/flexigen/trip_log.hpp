#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "flexigen/validation.hpp"

namespace flexigen {

// Auxiliary minute-resolution record of one trip leg. The hourly dataset
// cannot express sub-hour timing, so the generator logs every leg beside it;
// the analyzer's duration statistics read this file, not the hourly one.
struct TripLogEntry {
    int day_index = 0;        // 0-based generation day
    std::string leg;          // "out" or "return"
    int depart_minute = 0;    // minutes since that day's start; may exceed 1440
    double distance_km = 0.0;
    double traffic_factor = 1.0;
    int duration_min = 1;
    double energy_kwh = 0.0;

    bool operator==(const TripLogEntry&) const = default;
};

inline constexpr std::string_view kTripLogHeader =
    "day_index,leg,depart_minute,distance_km,traffic_factor,duration_min,energy_kwh";

void write_trip_log(const std::vector<TripLogEntry>& trips, const std::filesystem::path& path);

struct TripLogReadResult {
    std::vector<TripLogEntry> trips;
    ValidationReport issues;
};

TripLogReadResult read_trip_log(const std::filesystem::path& path);

}  // namespace flexigen
