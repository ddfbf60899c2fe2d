#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kljn {

// Chain network of N + 1 hosts (indices 0..N) joined by N unit wire
// segments. Segment length only matters for the timing model; the
// scheduling protocol itself is purely combinatorial.
struct Network {
    explicit Network(int n, double segment_length = 1000.0)
        : size_n(n), segment_length_m(segment_length) {
        if (n < 1)
            throw std::invalid_argument("network size must be at least 1");
        if (!(segment_length > 0.0))
            throw std::invalid_argument("segment length must be positive");
    }

    int size_n;
    double segment_length_m;

    int host_count() const { return size_n + 1; }
    double loop_length_m(int distance) const { return distance * segment_length_m; }
};

// Key-exchange circuit between two hosts. A loop (left, right) occupies the
// wire segments (i, i+1) for left <= i < right. Valid by construction.
class Loop {
public:
    Loop(int left, int right) : left_(left), right_(right) {
        if (left < 0 || right <= left)
            throw std::invalid_argument("loop requires 0 <= left < right");
    }

    int left() const { return left_; }
    int right() const { return right_; }
    int distance() const { return right_ - left_; }

    friend bool operator==(const Loop&, const Loop&) = default;

private:
    int left_;
    int right_;
};

using Segment = std::pair<int, int>;

inline std::vector<Segment> segments(const Loop& loop) {
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(loop.distance()));
    for (int i = loop.left(); i < loop.right(); ++i)
        out.emplace_back(i, i + 1);
    return out;
}

// Two loops overlap iff they share a wire segment. Sharing an endpoint host
// is not overlap: every host has independent left- and right-facing units.
inline bool loops_overlap(const Loop& a, const Loop& b) {
    return a.left() < b.right() && b.left() < a.right();
}

// True iff no two loops in the set share a segment. Equivalent to: sorted by
// left endpoint, each loop ends at or before the next one starts.
inline bool pairwise_non_overlapping(std::vector<Loop> loops) {
    std::sort(loops.begin(), loops.end(),
              [](const Loop& a, const Loop& b) { return a.left() < b.left(); });
    for (std::size_t i = 1; i < loops.size(); ++i)
        if (loops[i - 1].right() > loops[i].left())
            return false;
    return true;
}

} // namespace kljn
