#pragma once

#include "kljn/exchange.hpp"
#include "kljn/grid.hpp"

namespace kljn {

inline constexpr double speed_of_light_mps = 299'792'458.0;
inline constexpr double default_bandwidth_safety = 10.0;

// Deterministic time budget of one exchange. The correlation time is 1/B,
// one measurement slot spans window_factor correlation times, and a secure
// bit costs two slots on average (half of all slots land on same-same).
struct TimingModel {
    double tau_s;
    double slot_s;
    double bit_exchange_avg_s;
    double ke_duration_s;
};

TimingModel make_timing_model(const NoiseParams& params, int key_length);

// key_length * 2 * window_factor / B.
double ke_duration(const NoiseParams& params, int key_length);

// Pessimistic serial total: every exchange billed at the same duration,
// rounds strictly one after another.
double network_key_distribution_time(int n, const NoiseParams& params,
                                     int key_length);

// The noise band must sit well below the wave propagation limit of the
// longest loop: ok iff b_kljn <= (c / length) / safety.
struct BandwidthCheck {
    bool ok;
    double limit_hz;
    double requested_hz;
    double loop_length_m;
    double safety;
};

BandwidthCheck validate_bandwidth(double b_kljn, double loop_length_m,
                                  double safety = default_bandwidth_safety);

// What-if estimate, not part of the protocol above: run each distance phase
// at the highest bandwidth its own loop length admits, so short loops go
// faster than the longest one. Sums min(d, n+1-d) rounds per distance at
// that distance's duration.
double per_distance_distribution_time(const Network& net, const NoiseParams& params,
                                      int key_length,
                                      double safety = default_bandwidth_safety);

} // namespace kljn
