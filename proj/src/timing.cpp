#include "kljn/timing.hpp"

#include "kljn/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace kljn {

TimingModel make_timing_model(const NoiseParams& params, int key_length) {
    params.validate();
    if (key_length < 1) throw std::invalid_argument("key length must be at least 1");
    TimingModel t;
    t.tau_s = 1.0 / params.b_kljn;
    t.slot_s = params.window_factor * t.tau_s;
    t.bit_exchange_avg_s = 2.0 * t.slot_s;
    t.ke_duration_s = key_length * t.bit_exchange_avg_s;
    return t;
}

double ke_duration(const NoiseParams& params, int key_length) {
    return make_timing_model(params, key_length).ke_duration_s;
}

double network_key_distribution_time(int n, const NoiseParams& params,
                                     int key_length) {
    return static_cast<double>(ke_count_closed_form(n)) *
           ke_duration(params, key_length);
}

BandwidthCheck validate_bandwidth(double b_kljn, double loop_length_m, double safety) {
    if (!(b_kljn > 0.0)) throw std::invalid_argument("bandwidth must be positive");
    if (!(loop_length_m > 0.0)) throw std::invalid_argument("length must be positive");
    if (!(safety >= 1.0)) throw std::invalid_argument("safety factor must be >= 1");
    const double limit = speed_of_light_mps / loop_length_m / safety;
    return {b_kljn <= limit, limit, b_kljn, loop_length_m, safety};
}

double per_distance_distribution_time(const Network& net, const NoiseParams& params,
                                      int key_length, double safety) {
    params.validate();
    if (key_length < 1) throw std::invalid_argument("key length must be at least 1");

    double total = 0.0;
    for (int d = 1; d <= net.size_n; ++d) {
        const double length = net.loop_length_m(d);
        const double b_max = speed_of_light_mps / length / safety;
        NoiseParams fast = params;
        fast.b_kljn = b_max;
        const long rounds = std::min<long>(d, net.size_n + 1 - d);
        total += static_cast<double>(rounds) * ke_duration(fast, key_length);
    }
    return total;
}

} // namespace kljn
