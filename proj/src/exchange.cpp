#include "kljn/exchange.hpp"

#include "kljn/rng.hpp"
#include "kljn/stats.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace kljn {

void NoiseParams::validate() const {
    if (!(r_low > 0.0) || !(r_high > r_low))
        throw std::invalid_argument("resistors must satisfy 0 < r_low < r_high");
    if (!(t_eff > 0.0)) throw std::invalid_argument("t_eff must be positive");
    if (!(b_kljn > 0.0)) throw std::invalid_argument("b_kljn must be positive");
    if (!(boltzmann_k > 0.0)) throw std::invalid_argument("boltzmann_k must be positive");
    if (window_factor < 1)
        throw std::invalid_argument("window_factor must be at least 1");
}

MeanSquares expected_mean_squares(double r_loop, const NoiseParams& params) {
    params.validate();
    if (!(r_loop > 0.0))
        throw std::domain_error("loop resistance must be positive");
    const double s = params.four_ktb();
    return {s * r_loop, s / r_loop};
}

MeanSquares slot_mean_squares(double r_a, double r_b, const NoiseParams& params) {
    params.validate();
    if (!(r_a > 0.0) || !(r_b > 0.0))
        throw std::domain_error("resistances must be positive");
    // Evaluate through the symmetric functions of the pair so that swapped
    // arguments give bitwise-identical results.
    const double parallel = (r_a * r_b) / (r_a + r_b);
    const double series = r_a + r_b;
    const double s = params.four_ktb();
    return {s * parallel, s / series};
}

namespace {
std::atomic<std::uint64_t> g_truth_reads{0};
} // namespace

std::pair<int, int> ChannelRecord::truth_bits() const {
    g_truth_reads.fetch_add(1, std::memory_order_relaxed);
    return {bit_a_, bit_b_};
}

std::uint64_t ChannelRecord::truth_access_count() {
    return g_truth_reads.load(std::memory_order_relaxed);
}

ChannelRecord simulate_slot(int bit_a, int bit_b, const NoiseParams& params,
                            std::mt19937_64& rng) {
    params.validate();
    const double ra = params.resistor_for(bit_a);
    const double rb = params.resistor_for(bit_b);
    const double rs = ra + rb;
    const double s = params.four_ktb();
    const double sd_a = std::sqrt(s * ra);
    const double sd_b = std::sqrt(s * rb);

    ChannelRecord rec;
    rec.sample_rate = params.sample_rate();
    const int m = params.samples_per_slot();
    rec.u_samples.reserve(static_cast<std::size_t>(m));
    rec.i_samples.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto [za, zb] = gaussian_pair(rng);
        const double ua = sd_a * za;
        const double ub = sd_b * zb;
        rec.u_samples.push_back((ua * rb + ub * ra) / rs);
        rec.i_samples.push_back((ua - ub) / rs);
    }
    rec.bit_a_ = bit_a;
    rec.bit_b_ = bit_b;
    return rec;
}

ChannelRecord simulate_ideal_record(double r_loop, const NoiseParams& params,
                                    std::mt19937_64& rng) {
    const MeanSquares ms = expected_mean_squares(r_loop, params);
    const double sd_u = std::sqrt(ms.u2);
    const double sd_i = std::sqrt(ms.i2);

    ChannelRecord rec;
    rec.sample_rate = params.sample_rate();
    const int m = params.samples_per_slot();
    rec.u_samples.reserve(static_cast<std::size_t>(m));
    rec.i_samples.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const auto [zu, zi] = gaussian_pair(rng);
        rec.u_samples.push_back(sd_u * zu);
        rec.i_samples.push_back(sd_i * zi);
    }
    return rec;
}

double estimate_loop_resistance(const ChannelRecord& record,
                                const NoiseParams& params, Channel channel) {
    params.validate();
    if (record.u_samples.size() != record.i_samples.size())
        throw std::invalid_argument("voltage and current streams differ in length");
    if (record.u_samples.size() < 2)
        throw std::invalid_argument("record too short to estimate from");

    const double s = params.four_ktb();
    switch (channel) {
        case Channel::voltage: {
            const double u2 = mean_square(record.u_samples);
            if (!(u2 > 0.0)) throw std::domain_error("voltage mean square is zero");
            return u2 / s;
        }
        case Channel::current: {
            const double i2 = mean_square(record.i_samples);
            if (!(i2 > 0.0)) throw std::domain_error("current mean square is zero");
            return s / i2;
        }
        case Channel::both: {
            const double u2 = mean_square(record.u_samples);
            const double i2 = mean_square(record.i_samples);
            if (!(u2 > 0.0) || !(i2 > 0.0))
                throw std::domain_error("mean square is zero");
            return std::sqrt((u2 / s) * (s / i2));
        }
    }
    throw std::logic_error("unknown channel");
}

SlotOutcome classify_slot(double r_estimate, int own_bit, const NoiseParams& params) {
    params.validate();
    if (!(r_estimate > 0.0))
        throw std::invalid_argument("resistance estimate must be positive");

    const double r_ll = 2.0 * params.r_low;
    const double r_mixed = params.r_low + params.r_high;
    const double r_hh = 2.0 * params.r_high;
    const double low_split = std::sqrt(r_ll * r_mixed);
    const double high_split = std::sqrt(r_mixed * r_hh);

    SlotOutcome out{SlotClass::secure_bit, std::nullopt, r_estimate};
    if (r_estimate < low_split) {
        out.classification = own_bit == 0 ? SlotClass::discard_same
                                          : SlotClass::indeterminate;
    } else if (r_estimate > high_split) {
        out.classification = own_bit == 1 ? SlotClass::discard_same
                                          : SlotClass::indeterminate;
    } else {
        out.classification = SlotClass::secure_bit;
        out.inferred_peer_bit = own_bit ? 0 : 1;
    }
    return out;
}

ExchangeReport exchange_key(const Loop& loop, int key_length,
                            const NoiseParams& params, std::mt19937_64& rng,
                            bool keep_trace, const SlotObserver& observer) {
    params.validate();
    if (key_length < 0)
        throw std::invalid_argument("key length must be non-negative");

    ExchangeReport report{loop, {}, {}, 0, 0, 0, 0, 0, 0, 0.0, {}};
    while (report.secure_bits < key_length) {
        const int a = static_cast<int>(rng() & 1u);
        const int b = static_cast<int>(rng() & 1u);
        const ChannelRecord rec = simulate_slot(a, b, params, rng);
        const double r_est = estimate_loop_resistance(rec, params, Channel::current);
        const SlotOutcome view_a = classify_slot(r_est, a, params);
        const SlotOutcome view_b = classify_slot(r_est, b, params);
        const long slot_index = report.slots_total++;

        // The secure/not-secure split depends only on the shared estimate,
        // so the two views can only differ between discard and indeterminate.
        if (view_a.classification == SlotClass::secure_bit) {
            report.key_a.push_back(static_cast<std::uint8_t>(a));
            report.key_b.push_back(static_cast<std::uint8_t>(b ? 0 : 1));
            ++report.secure_bits;
            if (a == b) ++report.false_secure;
        } else if (view_a.classification == SlotClass::indeterminate ||
                   view_b.classification == SlotClass::indeterminate) {
            ++report.anomalies;
        } else {
            ++report.discarded_same;
        }

        if (keep_trace)
            report.trace.push_back({slot_index, a, b, r_est, view_a.classification});
        if (observer) observer(rec, view_a, slot_index);
    }

    for (std::size_t i = 0; i < report.key_a.size(); ++i)
        if (report.key_a[i] != report.key_b[i]) ++report.bit_errors;
    report.ber = report.secure_bits == 0
                     ? 0.0
                     : static_cast<double>(report.bit_errors) /
                           static_cast<double>(report.secure_bits);
    return report;
}

} // namespace kljn
