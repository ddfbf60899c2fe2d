#pragma once

#include "kljn/grid.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace kljn {

// Noise and resistor configuration shared by both parties of an exchange.
// Bit 0 selects r_low, bit 1 selects r_high.
struct NoiseParams {
    double t_eff = 1e9;                 // effective noise temperature, K
    double b_kljn = 1e4;                // noise bandwidth, Hz
    double r_low = 1e3;                 // ohm
    double r_high = 1e4;                // ohm
    double boltzmann_k = 1.380649e-23;  // J/K
    int window_factor = 100;            // correlation times per measurement

    void validate() const;

    double resistor_for(int bit) const { return bit ? r_high : r_low; }
    double sample_rate() const { return 2.0 * b_kljn; } // Nyquist of the band
    int samples_per_slot() const { return 2 * window_factor; }
    double slot_duration_s() const { return window_factor / b_kljn; }
    // 4 k T B, the scale factor of the Johnson noise law.
    double four_ktb() const { return 4.0 * boltzmann_k * t_eff * b_kljn; }
};

struct MeanSquares {
    double u2; // V^2
    double i2; // A^2
};

// Johnson noise law for a loop of total resistance r:
//   <U^2> = 4 k T r B,   <I^2> = 4 k T B / r.
// Throws std::domain_error for non-positive r.
MeanSquares expected_mean_squares(double r_loop, const NoiseParams& params);

// Analytic per-slot statistics of the two-generator circuit below: the wire
// voltage sees the parallel combination of the end resistors, the loop
// current their series sum,
//   <U^2> = 4 k T B * (ra*rb)/(ra+rb),   <I^2> = 4 k T B / (ra+rb).
// Both depend on the resistor pair only through symmetric functions, which
// is the entire security argument: swapping ends is invisible on the wire.
MeanSquares slot_mean_squares(double r_a, double r_b, const NoiseParams& params);

// One bit-exchange slot's sampled waveforms. The generating bit pair is kept
// for test oracles and reporting only; reading it bumps a global audit
// counter so tests can prove the eavesdropper path never touches it.
struct ChannelRecord {
    std::vector<double> u_samples;
    std::vector<double> i_samples;
    double sample_rate = 0.0;

    std::pair<int, int> truth_bits() const;
    static std::uint64_t truth_access_count();

private:
    int bit_a_ = 0;
    int bit_b_ = 0;
    friend ChannelRecord simulate_slot(int, int, const NoiseParams&, std::mt19937_64&);
};

// Samples one slot of the two-generator circuit: each end drives an
// independent Gaussian voltage with per-sample variance 4 k T r B, and the
// wire observables are
//   U = (Ua*rb + Ub*ra)/(ra+rb),   I = (Ua - Ub)/(ra+rb).
// Record length is window_factor periods at the Nyquist rate 2B; the samples
// are i.i.d., so the whole band's power sits in each one.
ChannelRecord simulate_slot(int bit_a, int bit_b, const NoiseParams& params,
                            std::mt19937_64& rng);

// Reference record of an ideal loop of resistance r_loop whose voltage and
// current follow the Johnson law independently. Used to exercise estimators
// against a known ground truth without a resistor pair.
ChannelRecord simulate_ideal_record(double r_loop, const NoiseParams& params,
                                    std::mt19937_64& rng);

enum class Channel { voltage, current, both };

// Inverts the Johnson law on the chosen channel:
//   voltage: r = <U^2> / 4kTB     (parallel resistance of a slot record)
//   current: r = 4kTB / <I^2>     (series resistance of a slot record)
//   both:    geometric mean of the two.
// Throws std::invalid_argument for records shorter than two samples and
// std::domain_error when a needed mean square is zero.
double estimate_loop_resistance(const ChannelRecord& record,
                                const NoiseParams& params, Channel channel);

enum class SlotClass { secure_bit, discard_same, indeterminate };

struct SlotOutcome {
    SlotClass classification;
    std::optional<int> inferred_peer_bit; // set iff secure_bit
    double r_loop_estimate;
};

// Nearest-hypothesis decision on the series-resistance scale, with the three
// candidates {2*r_low, r_low + r_high, 2*r_high} split at their geometric
// midpoints. A same-same reading that contradicts the caller's own bit is
// reported as indeterminate instead of discard.
SlotOutcome classify_slot(double r_estimate, int own_bit, const NoiseParams& params);

struct SlotTrace {
    long slot;
    int bit_a;
    int bit_b;
    double r_estimate;
    SlotClass classification;
};

struct ExchangeReport {
    Loop loop;
    std::vector<std::uint8_t> key_a; // left host's view of the shared key
    std::vector<std::uint8_t> key_b; // right host's view
    long slots_total = 0;
    long secure_bits = 0;
    long discarded_same = 0;
    long anomalies = 0;    // slots where a party's reading contradicts its own bit
    long false_secure = 0; // same-same slots misread as mixed
    long bit_errors = 0;   // positions where the two views disagree
    double ber = 0.0;
    std::vector<SlotTrace> trace; // filled only when requested
};

using SlotObserver =
    std::function<void(const ChannelRecord&, const SlotOutcome&, long slot_index)>;

// Runs fresh random-bit slots until key_length secure bits accumulate. Both
// parties read the same wire, so they share the resistance estimate; the key
// convention is the left host's bit (the right host records the complement
// of its own). key_length 0 yields an empty report without running slots.
ExchangeReport exchange_key(const Loop& loop, int key_length,
                            const NoiseParams& params, std::mt19937_64& rng,
                            bool keep_trace = false,
                            const SlotObserver& observer = {});

} // namespace kljn
