#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flexigen/config.hpp"
#include "flexigen/hourly_record.hpp"

namespace flexigen {

// Hour indices are 1-based and absolute: hour h covers minutes
// [(h-1)*60, h*60) from generation start.
inline long hour_of_minute(double absolute_minute) {
    long h = static_cast<long>(absolute_minute / 60.0) + 1;
    return h < 1 ? 1 : h;
}

// One excursion away from the tracked home charger, already quantized to
// hours. The quantization rule (motion beats parking, and a return always
// gets at least one incoming hour) lives in the generators; the builders
// only paint.
struct AwayEpisode {
    long depart_hour = 0;          // first hour not connected
    long incoming_start_hour = 0;  // first hour labeled incoming (>= depart_hour)
    long incoming_end_hour = 0;    // last hour labeled incoming; reconnects the hour after
    double required_soc = 0.0;     // requirement for the departure opening this episode
    double arrival_soc = 0.0;      // projected SoC when the EV reaches the charger

    bool operator==(const AwayEpisode&) const = default;
};

// One visit to the tracked office charger, hours quantized as above. An EV
// that will not plug in gets no episode at all (it must not be labeled
// incoming toward a charger it never connects to).
struct OfficeVisit {
    long incoming_start_hour = 0;
    long incoming_end_hour = 0;    // connected from the following hour
    long connected_end_hour = 0;   // last connected hour; away again afterwards
    std::string plug_label;
    double required_soc = 0.0;
    double arrival_soc = 0.0;

    bool operator==(const OfficeVisit&) const = default;
};

// Expands home-profile episodes into `horizon_hours` records. Hours outside
// all episodes are connected to `charger_label` with the departure countdown
// aimed at the next episode; `tail_required_soc` covers the final session
// when no further episode exists. Episodes may extend beyond the horizon
// (they terminate the last countdown); records are truncated to the horizon.
std::vector<EvHourRecord> build_home_records(const std::vector<AwayEpisode>& episodes,
                                             long horizon_hours,
                                             const std::string& charger_label,
                                             double tail_required_soc,
                                             const GenerationConfig& cfg);

// Expands office visits; hours outside any visit are away.
std::vector<EvHourRecord> build_office_records(const std::vector<OfficeVisit>& visits,
                                               long horizon_hours,
                                               const GenerationConfig& cfg);

}  // namespace flexigen
