#pragma once

#include <optional>
#include <span>

#include "flexigen/config.hpp"
#include "flexigen/rng.hpp"

namespace flexigen {

enum class Location { home, work, leisure };

// One directed trip. `depart_minute` is relative to the start of the leg's
// calendar day and may exceed 1440 when an outing runs past midnight.
struct TripLeg {
    Location origin = Location::home;
    Location destination = Location::work;
    double depart_minute = 0.0;
    double distance_km = 0.0;
    double traffic_factor = 1.0;  // >= 1
    int duration_min = 1;
    double energy_kwh = 0.0;
    std::optional<double> mid_trip_charge_target;  // SoC percent, set when the EV charges en route

    bool operator==(const TripLeg&) const = default;
};

// Picks a traffic bucket by probability, then returns
// 1 + uniform(min_increase, max_increase). Table must be normalized.
double sample_traffic_factor(RngStream& rng, std::span<const TrafficBucket> table);

// round(distance / speed * 60 * factor), never below one minute.
// Throws std::invalid_argument for non-positive distance or speed, or
// factor < 1.
int trip_duration_minutes(double distance_km, double speed_kmh, double factor);

// distance * consumption * (1 + coupling * (factor - 1)): extra time in
// traffic raises consumption linearly, with `coupling` scaling the effect
// from none (0) to fully proportional (1).
double trip_energy_kwh(double distance_km, double consumption_kwh_per_km, double factor,
                       double coupling);

// SoC after consuming `energy_kwh` from a battery of `capacity_kwh`.
// Throws DepletionError instead of clamping when the result would be
// negative: the caller was supposed to arrange a mid-trip charge.
double apply_trip(double soc_pct, double energy_kwh, double capacity_kwh);

// Charging decision for one leg, given the projected SoC at its end.
// Returns a target drawn uniformly from [charge_bat.min_pct, max_soc_cap]
// when the travel-charge coin lands, or unconditionally when the projection
// falls below the reserve floor (reserve_soc <= 0 disables that forcing).
// Consumes one bernoulli draw always, plus one draw when a target is made.
std::optional<double> decide_mid_trip_charge(RngStream& rng, double projected_soc_pct,
                                             const GenerationConfig& cfg);

// Owner's required SoC for a departure, uniform over the configured band.
double sample_required_soc(RngStream& rng, const ChargeBand& band);

// SoC on arrival for a leg that consumes `energy_pct` (percent of capacity),
// honoring an optional charge: a charge resets the battery to the target at
// the start of the leg. If even that would end below zero the target is
// raised to max_soc_cap; if a full battery still cannot cover the leg, the
// config is infeasible and DepletionError propagates.
double resolve_leg_arrival_soc(double start_soc_pct, double energy_pct,
                               std::optional<double> charge_target, double max_soc_cap);

}  // namespace flexigen
