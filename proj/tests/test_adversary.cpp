#include "kljn/adversary.hpp"
#include "kljn/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace kljn;

namespace {

const NoiseParams defaults{};

// Mixed-ordering slots with random sides; label 1 means the low resistor sat
// at the left end.
void make_mixed(int count, std::uint64_t seed, std::vector<EveObservation>& obs,
                std::vector<int>& labels) {
    std::mt19937_64 g(seed);
    for (int s = 0; s < count; ++s) {
        const int low_left = static_cast<int>(g() & 1u);
        const int a = low_left ? 0 : 1;
        const ChannelRecord rec = simulate_slot(a, 1 - a, defaults, g);
        obs.push_back(eve_observe(rec, defaults, s));
        labels.push_back(low_left);
    }
}

} // namespace

TEST_CASE("the wire-tap observation never touches the generating bits") {
    std::mt19937_64 g(17);
    const ChannelRecord rec = simulate_slot(0, 1, defaults, g);
    const std::uint64_t before = ChannelRecord::truth_access_count();
    const EveObservation obs = eve_observe(rec, defaults, 42);
    CHECK(ChannelRecord::truth_access_count() == before);

    CHECK(obs.slot_index == 42);
    CHECK(obs.u_mean_square > 0.0);
    CHECK(obs.i_mean_square > 0.0);
    CHECK(obs.r_loop_estimate ==
          doctest::Approx(estimate_loop_resistance(rec, defaults, Channel::both)));
}

TEST_CASE("the guess attack validates its inputs") {
    std::vector<EveObservation> obs(1000);
    std::vector<int> labels(999, 0);
    CHECK_THROWS_AS(eve_guess_mixed_ordering(obs, labels), std::invalid_argument);

    std::vector<EveObservation> few(999);
    std::vector<int> few_labels(999, 0);
    CHECK_THROWS_AS(eve_guess_mixed_ordering(few, few_labels), std::domain_error);
}

TEST_CASE("the guess attack finds a genuinely leaky statistic") {
    // Positive control: plant the label in the voltage mean square.
    std::mt19937_64 g(23);
    std::vector<EveObservation> obs;
    std::vector<int> labels;
    for (int i = 0; i < 2000; ++i) {
        const int label = static_cast<int>(g() & 1u);
        EveObservation o{};
        const double z = gaussian_pair(g).first;
        o.u_mean_square = (label ? 2.0 : 1.0) + 0.05 * z;
        o.i_mean_square = 1.0;
        o.r_loop_estimate = 1.0;
        o.slot_index = i;
        obs.push_back(o);
        labels.push_back(label);
    }
    const GuessResult res = eve_guess_mixed_ordering(obs, labels);
    CHECK(res.accuracy > 0.95);
    CHECK(res.ci_low > 0.5); // chance play is ruled out
    CHECK(res.statistic == 1);
    CHECK(res.evaluated == 1000);
}

TEST_CASE("the guess attack scores at chance on real mixed slots") {
    std::vector<EveObservation> obs;
    std::vector<int> labels;
    make_mixed(2000, derive_seed(31, 0, 0, 0), obs, labels);
    const GuessResult res = eve_guess_mixed_ordering(obs, labels);
    CHECK(res.accuracy > 0.45);
    CHECK(res.accuracy < 0.55);
    CHECK(res.ci_low <= 0.5);
    CHECK(res.ci_high >= 0.5);
}

TEST_CASE("rank tests see no difference between the two orderings") {
    std::mt19937_64 g(derive_seed(37, 0, 0, 0));
    std::vector<ChannelRecord> lh, hl;
    for (int s = 0; s < 500; ++s) {
        lh.push_back(simulate_slot(0, 1, defaults, g));
        hl.push_back(simulate_slot(1, 0, defaults, g));
    }
    const IndistinguishabilityReport rep = indistinguishability_test(lh, hl, defaults);
    CHECK(rep.u2.p_value > 0.001);
    CHECK(rep.i2.p_value > 0.001);
    CHECK(rep.u2.n1 == 500);
    CHECK(rep.i2.n2 == 500);
    CHECK(std::fabs(rep.u2.auc - 0.5) < 0.1);
}

TEST_CASE("rank tests do flag a deliberately skewed collection") {
    std::mt19937_64 g(derive_seed(41, 0, 0, 0));
    std::vector<EveObservation> lh, hl;
    for (int s = 0; s < 500; ++s) {
        lh.push_back(eve_observe(simulate_slot(0, 1, defaults, g), defaults, s));
        ChannelRecord skewed = simulate_slot(1, 0, defaults, g);
        for (double& u : skewed.u_samples) u *= 1.05; // ~10% power bump
        hl.push_back(eve_observe(skewed, defaults, s));
    }
    const IndistinguishabilityReport rep = indistinguishability_test(lh, hl);
    CHECK(rep.u2.p_value < 1e-6);
    CHECK(rep.i2.p_value > 1e-6); // current channel untouched
}

TEST_CASE("identical collections are exactly neutral") {
    std::mt19937_64 g(43);
    std::vector<EveObservation> obs;
    for (int s = 0; s < 50; ++s)
        obs.push_back(eve_observe(simulate_slot(0, 1, defaults, g), defaults, s));
    const IndistinguishabilityReport rep = indistinguishability_test(obs, obs);
    CHECK(rep.u2.p_value == doctest::Approx(1.0));
    CHECK(rep.i2.p_value == doctest::Approx(1.0));
    CHECK(rep.u2.auc == doctest::Approx(0.5));
}

TEST_CASE("indistinguishability test rejects empty collections") {
    std::vector<EveObservation> some(3), none;
    CHECK_THROWS_AS(indistinguishability_test(some, none), std::invalid_argument);
    CHECK_THROWS_AS(indistinguishability_test(none, some), std::invalid_argument);
}
