#include "kljn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kljn {

double mean(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean of empty sample");
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double mean_square(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("mean square of empty sample");
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc / static_cast<double>(v.size());
}

double normal_two_sided_p(double z) {
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

std::pair<double, double> wilson_interval(long successes, long trials, double z) {
    if (trials <= 0) throw std::invalid_argument("wilson interval needs trials > 0");
    if (successes < 0 || successes > trials)
        throw std::invalid_argument("successes out of range");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

RankSumResult rank_sum_test(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.empty() || y.empty())
        throw std::invalid_argument("rank-sum test needs two non-empty samples");

    const std::size_t n1 = x.size(), n2 = y.size();
    const std::size_t n = n1 + n2;

    struct Tagged { double value; bool from_x; };
    std::vector<Tagged> all;
    all.reserve(n);
    for (double v : x) all.push_back({v, true});
    for (double v : y) all.push_back({v, false});
    std::sort(all.begin(), all.end(),
              [](const Tagged& a, const Tagged& b) { return a.value < b.value; });

    // Midranks over tie groups; accumulate the tie correction sum(t^3 - t).
    double rank_sum_x = 0.0;
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && all[j].value == all[i].value) ++j;
        const double t = static_cast<double>(j - i);
        const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t k = i; k < j; ++k)
            if (all[k].from_x) rank_sum_x += midrank;
        tie_term += t * t * t - t;
        i = j;
    }

    const double dn1 = static_cast<double>(n1), dn2 = static_cast<double>(n2);
    const double dn = static_cast<double>(n);
    const double u1 = rank_sum_x - dn1 * (dn1 + 1.0) / 2.0;
    const double mu = dn1 * dn2 / 2.0;
    const double var =
        dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));

    RankSumResult res{u1, 0.0, 1.0, u1 / (dn1 * dn2), n1, n2};
    if (var <= 0.0) return res; // everything tied: no evidence either way

    double num = u1 - mu;
    if (num > 0.5) num -= 0.5;      // continuity correction toward the mean
    else if (num < -0.5) num += 0.5;
    else num = 0.0;
    res.z = num / std::sqrt(var);
    res.p_value = normal_two_sided_p(res.z);
    return res;
}

} // namespace kljn
