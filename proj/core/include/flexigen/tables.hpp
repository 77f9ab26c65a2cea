#pragma once

#include <vector>

namespace flexigen {

// One row of a routine table: with `probability` the event happens inside the
// half-open window [hour_min, hour_max), expressed in minutes of day.
// Half-open windows let adjacent buckets (7-8h, 8-9h) partition the day
// without double-counting the shared boundary.
struct RoutineBucket {
    double probability = 0.0;
    int hour_min = 0;  // minutes of day, [0, 1440)
    int hour_max = 0;  // minutes of day, (0, 1440]

    bool operator==(const RoutineBucket&) const = default;
};

// One row of a distance table: with `probability` the trip distance is drawn
// uniformly from [min_km, max_km).
struct DistanceBucket {
    double probability = 0.0;
    double min_km = 0.0;
    double max_km = 0.0;

    bool operator==(const DistanceBucket&) const = default;
};

// One row of a traffic table: with `probability` the extra travel time is a
// fraction drawn uniformly from [min_increase, max_increase), e.g. 0.10 means
// the trip takes 10% longer than free-flow.
struct TrafficBucket {
    double probability = 0.0;
    double min_increase = 0.0;
    double max_increase = 0.0;

    bool operator==(const TrafficBucket&) const = default;
};

template <class Bucket>
double table_probability_sum(const std::vector<Bucket>& table) {
    double sum = 0.0;
    for (const auto& b : table) sum += b.probability;
    return sum;
}

template <class Bucket>
std::vector<double> table_weights(const std::vector<Bucket>& table) {
    std::vector<double> w;
    w.reserve(table.size());
    for (const auto& b : table) w.push_back(b.probability);
    return w;
}

}  // namespace flexigen
