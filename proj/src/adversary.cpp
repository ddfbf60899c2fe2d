#include "kljn/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kljn {

EveObservation eve_observe(const ChannelRecord& record, const NoiseParams& params,
                           long slot_index) {
    EveObservation obs;
    obs.u_mean_square = mean_square(record.u_samples);
    obs.i_mean_square = mean_square(record.i_samples);
    obs.r_loop_estimate = estimate_loop_resistance(record, params, Channel::both);
    obs.slot_index = slot_index;
    return obs;
}

namespace {

double statistic_value(const EveObservation& obs, int which) {
    switch (which) {
        case 0: return obs.r_loop_estimate;
        case 1: return obs.u_mean_square;
        case 2: return obs.i_mean_square;
        default: throw std::logic_error("unknown statistic");
    }
}

struct ThresholdRule {
    double threshold;
    bool predict_above;
    double accuracy;
};

// Best split of one statistic: sweep the sorted sample, try both prediction
// directions at every boundary between distinct values.
ThresholdRule fit_threshold(const std::vector<double>& values,
                            const std::vector<int>& labels) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values[a] < values[b];
    });

    long total_ones = 0;
    for (int l : labels) total_ones += l;
    const long total = static_cast<long>(n);

    // Walking up the sorted values, ones_below counts label-1 samples at or
    // below the current cut. Predicting "1 above the cut" scores
    // (ones - ones_below) + zeros_below correct.
    ThresholdRule best{-std::numeric_limits<double>::infinity(), true, -1.0};
    long ones_below = 0;
    auto consider = [&](double threshold, long below) {
        const long zeros_below = below - ones_below;
        const long correct_above = (total_ones - ones_below) + zeros_below;
        const long correct_below = total - correct_above;
        const double acc_above =
            static_cast<double>(correct_above) / static_cast<double>(total);
        const double acc_below =
            static_cast<double>(correct_below) / static_cast<double>(total);
        if (acc_above > best.accuracy) best = {threshold, true, acc_above};
        if (acc_below > best.accuracy) best = {threshold, false, acc_below};
    };

    consider(-std::numeric_limits<double>::infinity(), 0);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && values[order[j]] == values[order[i]]) {
            ones_below += labels[order[j]];
            ++j;
        }
        const double here = values[order[i]];
        const double next = j < n ? values[order[j]]
                                  : std::numeric_limits<double>::infinity();
        consider(j < n ? 0.5 * (here + next) : here, static_cast<long>(j));
        i = j;
    }
    return best;
}

} // namespace

GuessResult eve_guess_mixed_ordering(const std::vector<EveObservation>& observations,
                                     const std::vector<int>& labels) {
    if (observations.size() != labels.size())
        throw std::invalid_argument("labels must match observations");
    if (observations.size() < 1000)
        throw std::domain_error(
            "refusing to fit a classifier on fewer than 1000 observations");

    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < observations.size(); ++i)
        (i % 2 == 0 ? train : test).push_back(i);

    int best_stat = 0;
    ThresholdRule best_rule{0.0, true, -1.0};
    for (int stat = 0; stat < 3; ++stat) {
        std::vector<double> values;
        std::vector<int> train_labels;
        values.reserve(train.size());
        train_labels.reserve(train.size());
        for (std::size_t i : train) {
            values.push_back(statistic_value(observations[i], stat));
            train_labels.push_back(labels[i]);
        }
        const ThresholdRule rule = fit_threshold(values, train_labels);
        if (rule.accuracy > best_rule.accuracy) {
            best_rule = rule;
            best_stat = stat;
        }
    }

    long correct = 0;
    for (std::size_t i : test) {
        const double v = statistic_value(observations[i], best_stat);
        const int predicted = (v > best_rule.threshold) == best_rule.predict_above ? 1 : 0;
        if (predicted == labels[i]) ++correct;
    }
    const long evaluated = static_cast<long>(test.size());
    const auto [lo, hi] = wilson_interval(correct, evaluated, z_99);

    GuessResult res;
    res.accuracy = static_cast<double>(correct) / static_cast<double>(evaluated);
    res.ci_low = lo;
    res.ci_high = hi;
    res.evaluated = evaluated;
    res.statistic = best_stat;
    res.threshold = best_rule.threshold;
    res.predict_above = best_rule.predict_above;
    return res;
}

IndistinguishabilityReport indistinguishability_test(
    const std::vector<EveObservation>& lh, const std::vector<EveObservation>& hl) {
    if (lh.empty() || hl.empty())
        throw std::invalid_argument("both observation collections must be non-empty");

    std::vector<double> lh_u2, hl_u2, lh_i2, hl_i2;
    lh_u2.reserve(lh.size());
    lh_i2.reserve(lh.size());
    hl_u2.reserve(hl.size());
    hl_i2.reserve(hl.size());
    for (const auto& o : lh) {
        lh_u2.push_back(o.u_mean_square);
        lh_i2.push_back(o.i_mean_square);
    }
    for (const auto& o : hl) {
        hl_u2.push_back(o.u_mean_square);
        hl_i2.push_back(o.i_mean_square);
    }
    return {rank_sum_test(lh_u2, hl_u2), rank_sum_test(lh_i2, hl_i2)};
}

IndistinguishabilityReport indistinguishability_test(
    const std::vector<ChannelRecord>& lh_records,
    const std::vector<ChannelRecord>& hl_records, const NoiseParams& params) {
    if (lh_records.empty() || hl_records.empty())
        throw std::invalid_argument("both record collections must be non-empty");

    std::vector<EveObservation> lh, hl;
    lh.reserve(lh_records.size());
    hl.reserve(hl_records.size());
    long idx = 0;
    for (const auto& r : lh_records) lh.push_back(eve_observe(r, params, idx++));
    for (const auto& r : hl_records) hl.push_back(eve_observe(r, params, idx++));
    return indistinguishability_test(lh, hl);
}

} // namespace kljn
