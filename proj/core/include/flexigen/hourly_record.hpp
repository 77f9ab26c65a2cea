#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexigen/validation.hpp"

namespace flexigen {

// EV connection states of the hourly timeline.
inline constexpr int kStateConnected = 1;  // parked at the tracked charger, ready to charge
inline constexpr int kStateIncoming = 2;   // on its way toward the tracked charger
inline constexpr int kStateAway = 3;       // in transit or parked elsewhere

// One output row. Optional fields follow the presence rules:
//   charger                      present iff state is 1 or 2
//   est_departure, required_soc  present iff state is 1
//   est_arrival, est_soc_arrival present iff state is 2
// Absent fields serialize as the literal token "nan".
struct EvHourRecord {
    int month = 1;     // 1..12
    int hour = 1;      // 1..24; hour k covers the clock interval [k-1:00, k:00)
    int day_type = 1;  // ISO weekday 1..7, 8 for holidays
    int ev_state = kStateConnected;
    std::optional<std::string> charger;
    std::optional<int> est_departure;      // time steps until departure, >= 1
    std::optional<double> required_soc;    // percent the EV must reach by departure
    std::optional<int> est_arrival;        // time steps until arrival, 1..24
    std::optional<double> est_soc_arrival; // projected percent on arrival

    bool operator==(const EvHourRecord&) const = default;
};

inline constexpr std::string_view kCsvHeader =
    "month,hour,day_type,ev_state,charger,estimated_departure_time,"
    "required_soc_departure,estimated_arrival_time,estimated_soc_arrival";

// One CSV line, no newline. Integers unpadded, SoC with one decimal place,
// absent fields as "nan".
std::string format_record(const EvHourRecord& rec);

std::string records_to_csv(const std::vector<EvHourRecord>& records);

// Validates, then writes UTF-8 with LF line endings. Throws
// std::invalid_argument when the records do not pass validate_dataset, and
// std::runtime_error on I/O failure.
void write_csv(const std::vector<EvHourRecord>& records, const std::filesystem::path& path);

struct CsvReadResult {
    std::vector<EvHourRecord> records;
    ValidationReport issues;  // header / structural problems found while reading
};

// Reads a dataset file back. Malformed rows become findings (with row
// numbers) rather than exceptions; rows that parse structurally are returned
// even if their values are out of domain — validate_dataset judges those.
CsvReadResult read_csv(const std::filesystem::path& path);

}  // namespace flexigen
