#pragma once

#include <optional>
#include <span>

#include "flexigen/hourly_record.hpp"
#include "flexigen/validation.hpp"

namespace flexigen {

// Checks a record stream against the dataset contract:
//   - field domains (month, hour, day type, state, charger ID shape, SoC in [0,100])
//   - presence rules per state
//   - hour column cycling 1..24
//   - legal transitions only: 1->1, 1->2, 1->3, 3->3, 3->2, 2->2, 2->1
//   - estimated-departure countdown: -1 per connected hour, reaching 1 in the
//     last connected hour of a run (runs cut off by the end of data may stop
//     higher)
//   - estimated-arrival countdown: -1 per incoming hour, reaching 1 in the
//     hour before reconnection (same end-of-data allowance)
//   - required SoC constant within a connected run, estimated arrival SoC
//     constant within an incoming run
//   - total row count, when the caller knows the horizon
//
// Findings are data; the function never throws.
ValidationReport validate_dataset(std::span<const EvHourRecord> records,
                                  std::optional<long> expected_rows = std::nullopt);

}  // namespace flexigen
