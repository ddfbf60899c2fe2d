#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace kljn {

double mean(const std::vector<double>& v);
double mean_square(const std::vector<double>& v);

// Two-sided standard normal tail probability P(|Z| >= |z|).
double normal_two_sided_p(double z);

// Wilson score interval for a binomial proportion at the given normal
// quantile (2.5758... for 99%). Returns {low, high}.
std::pair<double, double> wilson_interval(long successes, long trials, double z);

inline constexpr double z_99 = 2.5758293035489004; // 99% two-sided quantile

// Wilcoxon/Mann-Whitney rank-sum test with midranks and tie-corrected normal
// approximation. auc = U1 / (n1*n2) is the probability-of-superiority effect
// size; a degenerate comparison (all values tied) reports z = 0, p = 1.
struct RankSumResult {
    double u_statistic;
    double z;
    double p_value;
    double auc;
    std::size_t n1;
    std::size_t n2;
};

RankSumResult rank_sum_test(const std::vector<double>& x, const std::vector<double>& y);

} // namespace kljn
