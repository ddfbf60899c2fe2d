#include "kljn/schedule.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace kljn {

long ke_count_closed_form(long n) {
    if (n < 1) throw std::invalid_argument("network size must be at least 1");
    if (n % 2 == 1) {
        const long h = (n + 1) / 2;
        return h * h;
    }
    return n * n / 4 + n / 2;
}

std::vector<Round> rounds_for_distance(const Network& net, int distance) {
    const int n = net.size_n;
    if (distance < 1 || distance > n)
        throw std::domain_error("loop distance must lie in 1..n");

    std::vector<Round> rounds;
    for (int r = 0; r < distance; ++r) {
        Round round;
        for (int i = r; i + distance <= n; i += distance)
            round.loops.emplace_back(i, i + distance);
        if (!round.loops.empty())
            rounds.push_back(std::move(round));
    }
    return rounds;
}

Schedule full_schedule(const Network& net) {
    Schedule s{net, {}};
    s.phases.reserve(static_cast<std::size_t>(net.size_n));
    for (int d = 1; d <= net.size_n; ++d)
        s.phases.push_back({d, rounds_for_distance(net, d)});
    return s;
}

ScheduleReport verify_schedule(const Schedule& schedule) {
    ScheduleReport report;
    const int n = schedule.network.size_n;

    for (const auto& phase : schedule.phases) {
        for (std::size_t r = 0; r < phase.rounds.size(); ++r) {
            const auto& loops = phase.rounds[r].loops;
            for (std::size_t i = 0; i < loops.size(); ++i) {
                for (std::size_t j = i + 1; j < loops.size(); ++j) {
                    if (!loops_overlap(loops[i], loops[j])) continue;
                    const int seg = std::max(loops[i].left(), loops[j].left());
                    std::ostringstream msg;
                    msg << "distance " << phase.distance << " round " << r
                        << ": loops (" << loops[i].left() << "," << loops[i].right()
                        << ") and (" << loops[j].left() << "," << loops[j].right()
                        << ") share segment (" << seg << "," << seg + 1 << ")";
                    report.violations.push_back(
                        {ScheduleViolationKind::overlap, msg.str()});
                }
            }
        }
    }

    // Every unordered host pair must appear exactly once across the schedule.
    std::map<std::pair<int, int>, int> seen;
    for (const auto& phase : schedule.phases)
        for (const auto& round : phase.rounds)
            for (const auto& loop : round.loops)
                ++seen[{loop.left(), loop.right()}];

    for (int a = 0; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            auto it = seen.find({a, b});
            const int count = it == seen.end() ? 0 : it->second;
            if (count == 1) continue;
            std::ostringstream msg;
            msg << "host pair (" << a << "," << b << ") scheduled " << count
                << " times";
            report.violations.push_back(
                {count == 0 ? ScheduleViolationKind::missing_pair
                            : ScheduleViolationKind::duplicate_pair,
                 msg.str()});
        }
    }

    const long total = schedule.total_rounds();
    const long expected = ke_count_closed_form(n);
    if (total != expected) {
        std::ostringstream msg;
        msg << "schedule has " << total << " rounds, closed form gives "
            << expected;
        report.violations.push_back(
            {ScheduleViolationKind::count_mismatch, msg.str()});
    }
    return report;
}

namespace {

// Loops of one distance are indexed by left endpoint; i and j conflict iff
// |i - j| < d. Backtracking with the usual symmetry break: a loop may reuse
// any round already opened or open exactly one new round.
bool assignable(int loop_count, int d, int round_budget) {
    std::vector<int> round_of(static_cast<std::size_t>(loop_count), -1);
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == loop_count) return true;
        const int limit = std::min(used + 1, round_budget);
        for (int r = 0; r < limit; ++r) {
            bool conflict = false;
            for (int j = std::max(0, i - d + 1); j < i; ++j) {
                if (round_of[static_cast<std::size_t>(j)] == r) {
                    conflict = true;
                    break;
                }
            }
            if (conflict) continue;
            round_of[static_cast<std::size_t>(i)] = r;
            if (self(self, i + 1, std::max(used, r + 1))) return true;
            round_of[static_cast<std::size_t>(i)] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

int min_rounds_oracle(int n, int distance) {
    if (n < 1) throw std::invalid_argument("network size must be at least 1");
    if (distance < 1 || distance > n)
        throw std::domain_error("loop distance must lie in 1..n");
    if (n > 14)
        throw std::domain_error("min_rounds_oracle search budget is n <= 14");

    const int loop_count = n + 1 - distance;
    for (int k = 1; k <= loop_count; ++k)
        if (assignable(loop_count, distance, k)) return k;
    return loop_count; // unreachable: k = loop_count always assigns
}

} // namespace kljn
