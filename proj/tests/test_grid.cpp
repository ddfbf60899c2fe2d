#include "kljn/grid.hpp"
#include "kljn/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace kljn;

TEST_CASE("network validates its size and exposes derived quantities") {
    CHECK_THROWS_AS(Network(0), std::invalid_argument);
    CHECK_THROWS_AS(Network(-3), std::invalid_argument);
    CHECK_THROWS_AS(Network(2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Network(2, -5.0), std::invalid_argument);

    const Network net(7, 1000.0);
    CHECK(net.host_count() == 8);
    CHECK(net.loop_length_m(1) == doctest::Approx(1000.0));
    CHECK(net.loop_length_m(7) == doctest::Approx(7000.0));
}

TEST_CASE("loop validates endpoints and reports its distance") {
    CHECK_THROWS_AS(Loop(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(Loop(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(Loop(3, 1), std::invalid_argument);

    const Loop loop(2, 6);
    CHECK(loop.left() == 2);
    CHECK(loop.right() == 6);
    CHECK(loop.distance() == 4);
    CHECK(loop == Loop(2, 6));
    CHECK_FALSE(loop == Loop(2, 5));
}

TEST_CASE("a loop occupies exactly the segments between its endpoints") {
    const auto segs = segments(Loop(1, 4));
    REQUIRE(segs.size() == 3);
    CHECK(segs[0] == Segment{1, 2});
    CHECK(segs[1] == Segment{2, 3});
    CHECK(segs[2] == Segment{3, 4});
}

TEST_CASE("overlap means sharing a wire segment, not sharing a host") {
    CHECK(loops_overlap(Loop(0, 2), Loop(1, 3)));
    CHECK(loops_overlap(Loop(1, 3), Loop(0, 2)));
    CHECK(loops_overlap(Loop(0, 5), Loop(1, 2))); // nested
    CHECK(loops_overlap(Loop(0, 3), Loop(0, 3)));
    CHECK_FALSE(loops_overlap(Loop(0, 2), Loop(2, 4))); // shared host only
    CHECK_FALSE(loops_overlap(Loop(0, 1), Loop(3, 5)));
}

TEST_CASE("pairwise overlap check accepts touching loops and rejects crossings") {
    CHECK(pairwise_non_overlapping({}));
    CHECK(pairwise_non_overlapping({Loop(0, 2)}));
    CHECK(pairwise_non_overlapping({Loop(0, 2), Loop(2, 4), Loop(4, 5)}));
    CHECK(pairwise_non_overlapping({Loop(4, 5), Loop(0, 2), Loop(2, 4)})); // unsorted
    CHECK_FALSE(pairwise_non_overlapping({Loop(0, 3), Loop(2, 4)}));
    CHECK_FALSE(pairwise_non_overlapping({Loop(0, 4), Loop(1, 2)}));
}

TEST_CASE("splitmix64 matches the published test vector") {
    // First output of the reference splitmix64 stream seeded with 0.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFull);
    CHECK(splitmix64(0x9E3779B97F4A7C15ull) == 0x6E789E6AA1B965F4ull);
}

TEST_CASE("derived seeds are reproducible and separate every coordinate") {
    const auto s = derive_seed(42, 1, 2, 3);
    CHECK(s == derive_seed(42, 1, 2, 3));
    CHECK(s != derive_seed(43, 1, 2, 3));
    CHECK(s != derive_seed(42, 2, 2, 3));
    CHECK(s != derive_seed(42, 1, 3, 3));
    CHECK(s != derive_seed(42, 1, 2, 4));
}

TEST_CASE("uniform01 stays inside (0, 1]") {
    std::mt19937_64 g(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = uniform01(g);
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("gaussian_pair is deterministic and has standard moments") {
    std::mt19937_64 a(12345), b(12345);
    for (int i = 0; i < 100; ++i) {
        const auto pa = gaussian_pair(a);
        const auto pb = gaussian_pair(b);
        CHECK(pa.first == pb.first);
        CHECK(pa.second == pb.second);
    }

    std::mt19937_64 g(12345);
    const int n = 200000;
    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n / 2; ++i) {
        const auto [x, y] = gaussian_pair(g);
        sum += x + y;
        sum2 += x * x + y * y;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    // 5 standard errors: SE(mean) = 1/sqrt(n), SE(var) ~ sqrt(2/n).
    CHECK(std::fabs(mean) < 5.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::fabs(var - 1.0) < 5.0 * std::sqrt(2.0 / n));
}
