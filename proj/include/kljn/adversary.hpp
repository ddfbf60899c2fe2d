#pragma once

#include "kljn/exchange.hpp"
#include "kljn/stats.hpp"

#include <vector>

namespace kljn {

// Everything a wire-tapper can compute from one slot. Built strictly from
// the public waveforms; the generating bits never enter.
struct EveObservation {
    double u_mean_square;
    double i_mean_square;
    double r_loop_estimate; // both-channel estimate, same as the legitimate one
    long slot_index;
};

EveObservation eve_observe(const ChannelRecord& record, const NoiseParams& params,
                           long slot_index = 0);

struct GuessResult {
    double accuracy;   // held-out accuracy of the best single-threshold rule
    double ci_low;     // 99% Wilson interval
    double ci_high;
    long evaluated;    // held-out sample count
    int statistic;     // 0 = resistance estimate, 1 = <U^2>, 2 = <I^2>
    double threshold;
    bool predict_above; // predicts label 1 when statistic > threshold
};

// Fits the best single-threshold classifier over each recorded statistic on
// the even-indexed observations and reports its accuracy on the odd-indexed
// rest, so a statistic with no real signal scores at chance instead of at
// the overfit optimum. labels[i] is the ground truth for observations[i]
// (for mixed slots: 1 when the low resistor sits at the left end). Requires
// at least 1000 observations; refuses otherwise.
GuessResult eve_guess_mixed_ordering(const std::vector<EveObservation>& observations,
                                     const std::vector<int>& labels);

struct IndistinguishabilityReport {
    RankSumResult u2; // rank test over per-slot <U^2>
    RankSumResult i2; // rank test over per-slot <I^2>
};

// Rank-sum comparison of the two mixed-slot orderings. Under the ideal model
// the two collections are identically distributed and the p-values are
// uniform; identical inputs hit the all-tied degenerate case and report p = 1.
IndistinguishabilityReport indistinguishability_test(
    const std::vector<ChannelRecord>& lh_records,
    const std::vector<ChannelRecord>& hl_records, const NoiseParams& params);

IndistinguishabilityReport indistinguishability_test(
    const std::vector<EveObservation>& lh, const std::vector<EveObservation>& hl);

} // namespace kljn
