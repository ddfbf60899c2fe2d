#include "kljn/rng.hpp"
#include "kljn/stats.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

using namespace kljn;

TEST_CASE("mean and mean_square reject empty samples") {
    CHECK_THROWS_AS(mean({}), std::invalid_argument);
    CHECK_THROWS_AS(mean_square({}), std::invalid_argument);
    CHECK(mean({1.0, 2.0, 3.0}) == doctest::Approx(2.0));
    CHECK(mean_square({1.0, 2.0, 3.0}) == doctest::Approx(14.0 / 3.0));
    CHECK(mean_square({-2.0, 2.0}) == doctest::Approx(4.0));
}

TEST_CASE("two-sided normal tail probability") {
    CHECK(normal_two_sided_p(0.0) == doctest::Approx(1.0));
    CHECK(normal_two_sided_p(1.959963984540054) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(normal_two_sided_p(-1.959963984540054) == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(normal_two_sided_p(3.0) < normal_two_sided_p(2.0));
}

TEST_CASE("wilson interval against independently computed values") {
    // Frozen from the closed-form score interval evaluated externally.
    const auto [lo, hi] = wilson_interval(50, 100, 1.96);
    CHECK(lo == doctest::Approx(0.40382982859014716).epsilon(1e-12));
    CHECK(hi == doctest::Approx(0.5961701714098528).epsilon(1e-12));

    const auto [lo99, hi99] = wilson_interval(5000, 10000, z_99);
    CHECK(lo99 == doctest::Approx(0.4871251239475885).epsilon(1e-12));
    CHECK(hi99 == doctest::Approx(0.5128748760524116).epsilon(1e-12));

    const auto [zlo, zhi] = wilson_interval(0, 10, 1.96);
    CHECK(zlo == doctest::Approx(0.0));
    CHECK(zhi == doctest::Approx(0.2775401687666166).epsilon(1e-12));

    CHECK_THROWS_AS(wilson_interval(1, 0, 1.96), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(11, 10, 1.96), std::invalid_argument);
    CHECK_THROWS_AS(wilson_interval(-1, 10, 1.96), std::invalid_argument);
}

TEST_CASE("rank-sum test matches reference values without ties") {
    // mannwhitneyu({1,2,3},{4,5,6}), continuity-corrected normal approximation.
    const auto r = rank_sum_test({1, 2, 3}, {4, 5, 6});
    CHECK(r.u_statistic == doctest::Approx(0.0));
    CHECK(r.auc == doctest::Approx(0.0));
    CHECK(r.p_value == doctest::Approx(0.08085559837005224).epsilon(1e-12));

    const auto flipped = rank_sum_test({4, 5, 6}, {1, 2, 3});
    CHECK(flipped.u_statistic == doctest::Approx(9.0));
    CHECK(flipped.auc == doctest::Approx(1.0));
    CHECK(flipped.p_value == doctest::Approx(r.p_value).epsilon(1e-12));
}

TEST_CASE("rank-sum test applies midranks and the tie correction") {
    // mannwhitneyu({1,1,2},{1,2,2}) with tie-corrected variance.
    const auto r = rank_sum_test({1, 1, 2}, {1, 2, 2});
    CHECK(r.u_statistic == doctest::Approx(3.0));
    CHECK(r.p_value == doctest::Approx(0.6192567541768621).epsilon(1e-12));
}

TEST_CASE("rank-sum test degenerates gracefully when everything ties") {
    const auto r = rank_sum_test({5, 5}, {5, 5, 5});
    CHECK(r.z == doctest::Approx(0.0));
    CHECK(r.p_value == doctest::Approx(1.0));
    CHECK(r.auc == doctest::Approx(0.5));
}

TEST_CASE("rank-sum test on one sample against itself is exactly neutral") {
    const std::vector<double> x{0.3, 1.7, 2.2, 9.1, 4.4};
    const auto r = rank_sum_test(x, x);
    CHECK(r.z == doctest::Approx(0.0));
    CHECK(r.p_value == doctest::Approx(1.0));
    CHECK(r.auc == doctest::Approx(0.5));
}

TEST_CASE("rank-sum test rejects empty inputs") {
    CHECK_THROWS_AS(rank_sum_test({}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(rank_sum_test({1.0}, {}), std::invalid_argument);
}

TEST_CASE("rank-sum test separates shifted samples and accepts equal ones") {
    std::mt19937_64 g(2024);
    std::vector<double> a, b, c;
    for (int i = 0; i < 500; ++i) {
        const auto [x, y] = gaussian_pair(g);
        a.push_back(x);
        b.push_back(y);
        c.push_back(x + 0.5); // half a standard deviation shift
    }
    CHECK(rank_sum_test(a, b).p_value > 0.001);
    CHECK(rank_sum_test(a, c).p_value < 1e-6);
}
