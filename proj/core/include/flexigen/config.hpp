#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexigen/tables.hpp"
#include "flexigen/validation.hpp"

namespace flexigen {

struct Car {
    std::string car_id;
    double battery_capacity_kwh = 0.0;
    double consumption_kwh_per_km = 0.0;

    bool operator==(const Car&) const = default;
};

// Identity of one plug: building / charger number / plug number.
struct ChargerRef {
    int building = 0;
    int number = 0;
    int plug = 0;

    auto operator<=>(const ChargerRef&) const = default;
};

struct Charger {
    ChargerRef id;
    double power_kw = 0.0;

    // Rendered identifier, e.g. "EVC_1_2_1".
    std::string label() const;

    bool operator==(const Charger&) const = default;
};

// Binds a car to the charging context it is generated against: a household
// plug for home runs, a building index for office runs.
struct ScenarioBinding {
    std::string car_id;
    std::optional<ChargerRef> home_charger;
    std::optional<int> office_building;

    bool operator==(const ScenarioBinding&) const = default;
};

struct ChargeBand {
    double min_pct = 0.0;
    double max_pct = 0.0;

    bool operator==(const ChargeBand&) const = default;
};

// Routine tables come in home/office pairs: the same calendar slot means
// "leave home" for a household profile and "arrive at work" for an office
// profile.
struct RoutineTablePair {
    std::vector<RoutineBucket> home;
    std::vector<RoutineBucket> office;

    bool operator==(const RoutineTablePair&) const = default;
};

// Weekend behaviour: a distinguished probability of not going out at all,
// plus activity windows for the days with an outing. Keeping stay-home
// separate is what produces multi-day connected sessions.
struct WeekendTable {
    double stay_home_prob = 0.0;
    std::vector<RoutineBucket> activities;

    bool operator==(const WeekendTable&) const = default;
};

struct MonthDay {
    int month = 1;
    int day = 1;

    auto operator<=>(const MonthDay&) const = default;
};

// The full generation parameter set. Parsed verbatim from the config
// document; run validate_config() and normalize_probabilities() before
// handing it to a generator.
struct GenerationConfig {
    std::string scenario = "scenario";
    int years = 1;
    std::uint64_t seed = 0;

    double routine_change_prob = 0.0;         // chance a weekday deviates from routine
    double charge_during_travel_prob = 0.0;   // propensity to charge away from the tracked charger
    double max_soc_cap = 100.0;               // global SoC ceiling, percent

    RoutineTablePair day_week;    // leave home / arrive at office
    RoutineTablePair night_week;  // arrive home / leave office
    WeekendTable weekends;

    std::vector<DistanceBucket> dist;
    std::vector<DistanceBucket> dist_weekend;
    std::vector<TrafficBucket> traffic_week;
    std::vector<TrafficBucket> traffic_weekend;

    double work_weekend_constant = 0.0;  // P(employee regularly works weekends)
    double work_weekend_rand_sat = 0.0;  // P(ad-hoc Saturday shift)
    double work_weekend_rand_sun = 0.0;  // P(ad-hoc Sunday shift)

    ChargeBand charge_bat;  // required-SoC band sampled per departure

    std::vector<Car> cars;
    std::vector<Charger> chargers;
    std::vector<ScenarioBinding> bindings;

    // Tunables the model needs but the table set above does not carry.
    double average_speed_kmh = 50.0;
    double traffic_energy_coupling = 0.5;  // 0 = traffic affects time only, 1 = fully proportional
    double reserve_soc = 10.0;             // forced-charge floor, percent; <= 0 disables forcing
    double return_distance_jitter = 0.05;  // relative spread applied to return-leg distance
    std::vector<MonthDay> holidays;
    int start_weekday = 1;  // ISO weekday of January 1st of the first year

    bool operator==(const GenerationConfig&) const = default;

    const Car* find_car(std::string_view id) const;
    const Charger* find_charger(const ChargerRef& ref) const;
};

// Parses a config document (JSON, // and /* */ comments allowed) into a raw,
// un-normalized GenerationConfig. Throws ConfigError on syntax errors (with
// byte position), unknown keys, missing mandatory tables, and type
// mismatches. See docs/config_format.md for the reference grammar.
GenerationConfig parse_config(const std::string& text);

// Pure structural validation. Near-miss probability sums (within 0.15 of 1)
// are warnings — normalize_probabilities() will fix them — anything worse is
// fatal, as are violated type invariants.
ValidationReport validate_config(const GenerationConfig& cfg);

// Divides every probability table by its sum so each sums to 1 within 1e-9.
// Call only on configs whose validation produced no fatal findings.
GenerationConfig normalize_probabilities(GenerationConfig cfg);

// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const GenerationConfig& cfg);

// Stable fingerprint of the canonical form, 16 hex digits.
std::string config_hash(const GenerationConfig& cfg);

struct LoadedConfig {
    GenerationConfig config;  // normalized iff report has no fatal finding
    ValidationReport report;
};

// parse + validate + normalize in one step. Parse failures throw; validation
// findings (including the normalization warnings) come back in the report,
// and the config is left raw when any finding is fatal.
LoadedConfig load_config_text(const std::string& text,
                              std::string_view fallback_scenario = "scenario");
LoadedConfig load_config_file(const std::filesystem::path& path);

}  // namespace flexigen
