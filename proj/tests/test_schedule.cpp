#include "kljn/schedule.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace kljn;

TEST_CASE("closed-form round counts for the worked network sizes") {
    CHECK(ke_count_closed_form(1) == 1);
    CHECK(ke_count_closed_form(2) == 2);
    CHECK(ke_count_closed_form(3) == 4);
    CHECK(ke_count_closed_form(7) == 16);
    CHECK(ke_count_closed_form(8) == 20);
    CHECK(ke_count_closed_form(12) == 42);
    CHECK_THROWS_AS(ke_count_closed_form(0), std::invalid_argument);
}

TEST_CASE("rounds at one distance follow the residue-class construction") {
    const Network net(7);

    const auto d3 = rounds_for_distance(net, 3);
    REQUIRE(d3.size() == 3);
    REQUIRE(d3[0].loops.size() == 2);
    CHECK(d3[0].loops[0] == Loop(0, 3));
    CHECK(d3[0].loops[1] == Loop(3, 6));
    REQUIRE(d3[1].loops.size() == 2);
    CHECK(d3[1].loops[0] == Loop(1, 4));
    CHECK(d3[1].loops[1] == Loop(4, 7));
    REQUIRE(d3[2].loops.size() == 1);
    CHECK(d3[2].loops[0] == Loop(2, 5));

    const auto d1 = rounds_for_distance(net, 1);
    REQUIRE(d1.size() == 1); // all adjacent loops run simultaneously
    CHECK(d1[0].loops.size() == 7);

    const auto d7 = rounds_for_distance(net, 7);
    REQUIRE(d7.size() == 1);
    CHECK(d7[0].loops.size() == 1);

    CHECK_THROWS_AS(rounds_for_distance(net, 0), std::domain_error);
    CHECK_THROWS_AS(rounds_for_distance(net, 8), std::domain_error);
}

TEST_CASE("per-distance round counts equal min(d, n+1-d)") {
    for (int n : {1, 2, 5, 9, 16}) {
        const Network net(n);
        for (int d = 1; d <= n; ++d) {
            const auto rounds = rounds_for_distance(net, d);
            CHECK(static_cast<int>(rounds.size()) == std::min(d, n + 1 - d));
        }
    }
}

TEST_CASE("a full schedule visits each distance once and sums to the closed form") {
    const Network net(7);
    const Schedule s = full_schedule(net);
    REQUIRE(s.phases.size() == 7);
    CHECK(s.total_rounds() == 16);
    for (const auto& phase : s.phases)
        for (const auto& round : phase.rounds)
            for (const auto& loop : round.loops)
                CHECK(loop.distance() == phase.distance);
}

TEST_CASE("verify_schedule passes the generated schedule") {
    for (int n : {1, 2, 3, 7, 8, 13}) {
        const Schedule s = full_schedule(Network(n));
        const ScheduleReport report = verify_schedule(s);
        CHECK(report.clean());
    }
}

TEST_CASE("verify_schedule catches a dropped loop") {
    Schedule s = full_schedule(Network(5));
    s.phases[1].rounds[0].loops.pop_back(); // drop (2,4) from distance 2
    const ScheduleReport report = verify_schedule(s);
    REQUIRE_FALSE(report.clean());
    const bool missing = std::any_of(
        report.violations.begin(), report.violations.end(), [](const auto& v) {
            return v.kind == ScheduleViolationKind::missing_pair;
        });
    CHECK(missing);
}

TEST_CASE("verify_schedule catches a duplicated pair") {
    Schedule s = full_schedule(Network(5));
    s.phases[0].rounds[0].loops.push_back(Loop(0, 1)); // (0,1) now runs twice
    const ScheduleReport report = verify_schedule(s);
    REQUIRE_FALSE(report.clean());
    const bool duplicate = std::any_of(
        report.violations.begin(), report.violations.end(), [](const auto& v) {
            return v.kind == ScheduleViolationKind::duplicate_pair;
        });
    CHECK(duplicate);
}

TEST_CASE("verify_schedule catches overlapping loops inside one round") {
    Schedule s = full_schedule(Network(5));
    // Move (1,3) into the round that already holds (0,2) and (2,4).
    s.phases[1].rounds[0].loops.push_back(Loop(1, 3));
    s.phases[1].rounds[1].loops.erase(s.phases[1].rounds[1].loops.begin());
    const ScheduleReport report = verify_schedule(s);
    REQUIRE_FALSE(report.clean());
    bool overlap = false;
    for (const auto& v : report.violations)
        if (v.kind == ScheduleViolationKind::overlap) {
            overlap = true;
            CHECK(v.message.find("share segment") != std::string::npos);
        }
    CHECK(overlap);
}

TEST_CASE("verify_schedule catches a round-count mismatch") {
    Schedule s = full_schedule(Network(5));
    // Splitting one round in two changes the total without losing any pair.
    Round moved;
    moved.loops.push_back(s.phases[1].rounds[0].loops.back());
    s.phases[1].rounds[0].loops.pop_back();
    s.phases[1].rounds.push_back(std::move(moved));
    const ScheduleReport report = verify_schedule(s);
    REQUIRE_FALSE(report.clean());
    const bool mismatch = std::any_of(
        report.violations.begin(), report.violations.end(), [](const auto& v) {
            return v.kind == ScheduleViolationKind::count_mismatch;
        });
    CHECK(mismatch);
}

TEST_CASE("exhaustive minimum round counts certify the construction") {
    // Spot values at n = 7.
    CHECK(min_rounds_oracle(7, 1) == 1);
    CHECK(min_rounds_oracle(7, 3) == 3);
    CHECK(min_rounds_oracle(7, 4) == 4);
    CHECK(min_rounds_oracle(7, 5) == 3);
    CHECK(min_rounds_oracle(7, 7) == 1);

    const Network net(6);
    for (int d = 1; d <= 6; ++d)
        CHECK(min_rounds_oracle(6, d) ==
              static_cast<int>(rounds_for_distance(net, d).size()));

    CHECK_THROWS_AS(min_rounds_oracle(15, 3), std::domain_error);
    CHECK_THROWS_AS(min_rounds_oracle(5, 0), std::domain_error);
    CHECK_THROWS_AS(min_rounds_oracle(5, 6), std::domain_error);
    CHECK_THROWS_AS(min_rounds_oracle(0, 1), std::invalid_argument);
}
