#pragma once

#include "kljn/grid.hpp"

#include <string>
#include <vector>

namespace kljn {

// One parallel step: loops of equal distance that share no wire segment and
// therefore run their exchanges simultaneously.
struct Round {
    std::vector<Loop> loops;
};

// All rounds needed at one loop distance.
struct DistancePhase {
    int distance;
    std::vector<Round> rounds;
};

// Complete pairing plan for a network: phases for d = 1..N whose union visits
// every unordered host pair exactly once.
struct Schedule {
    Network network;
    std::vector<DistancePhase> phases;

    long total_rounds() const {
        long n = 0;
        for (const auto& p : phases) n += static_cast<long>(p.rounds.size());
        return n;
    }
};

// Total number of key-exchange rounds for a full schedule:
//   ((n+1)/2)^2        for odd n,
//   n^2/4 + n/2        for even n,
// which both equal sum over d of min(d, n+1-d).
long ke_count_closed_form(long n);

// Rounds at one distance, grouped by residue class: round r holds the loops
// (i, i+d) with i = r (mod d), in ascending r then ascending i. Residue
// classes with no feasible loop are omitted, so the round count comes out as
// min(d, n+1-d). Throws std::domain_error for d outside 1..n.
std::vector<Round> rounds_for_distance(const Network& net, int distance);

Schedule full_schedule(const Network& net);

enum class ScheduleViolationKind {
    overlap,         // two loops in one round share a segment
    missing_pair,    // a host pair never exchanges
    duplicate_pair,  // a host pair exchanges more than once
    count_mismatch,  // total rounds disagree with the closed form
};

struct ScheduleViolation {
    ScheduleViolationKind kind;
    std::string message;
};

struct ScheduleReport {
    std::vector<ScheduleViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Structural audit of any schedule, including externally supplied ones.
ScheduleReport verify_schedule(const Schedule& schedule);

// Exhaustive minimum number of rounds needed to run all loops of one distance
// without segment sharing, found by backtracking over round assignments. It
// deliberately avoids the residue construction and the closed form so it can
// certify both. Refuses n > 14 (search budget).
int min_rounds_oracle(int n, int distance);

} // namespace kljn
