#pragma once

#include "kljn/grid.hpp"
#include "kljn/schedule.hpp"

#include <string>
#include <vector>

namespace kljn {

// Two frequency bands travel the same wires: the noise band used for key
// exchange and the mains power frequency.
enum class Band { kljn, power };

// Switched filter box states. state1 = pass-through host that only draws
// power, state2 = active host running exchanges toward its neighbors.
enum class HostMode { state1, state2 };

struct FilterFlags {
    bool passes_kljn;
    bool passes_power;
    bool passes(Band band) const {
        return band == Band::kljn ? passes_kljn : passes_power;
    }
};

// Per-mode truth table for the five switched filters in a host's box.
struct FilterBoxConfig {
    HostMode mode;
    FilterFlags a, b, c, d, e;
};

FilterBoxConfig box_config(HostMode mode);

// Every box is modeled as a small graph. Per host the nodes are
//
//   line_left --[A]-- tap_l --[C]-- tap_r --[A]-- line_right
//       |                \           /                |
//      [B]               [D]       [E]               [B]
//       |                  \       /                  |
//   kljn_left             power_port              kljn_right
//
// A gates the through line on each side, B couples each exchange unit onto
// its line terminal, C bridges the noise band across the power tap, D and E
// feed the power port from either side. An edge carries a band iff its
// filter passes that band in the host's current mode; adjacent boxes are
// joined by plain wire, which carries both bands. With the state1/state2
// truth tables this yields: pass-through hosts forward both bands and see
// only power; active hosts split the line in the noise band, each exchange
// unit facing its own side while power still flows through the tap.
struct FabricState {
    Network network;
    std::vector<HostMode> modes; // one per host, index 0..N
};

// Loop endpoints go to state2, everyone else stays state1. Rejects rounds
// whose loops overlap or leave the network.
FabricState modes_for_round(const Network& net, const Round& round);

enum class Terminal { line_left, line_right, kljn_left, kljn_right, power_port };

// Connected components of the host terminals under one band. Component ids
// are dense and assigned in host-then-terminal order, so equal inputs yield
// equal numbering.
class BandPartition {
public:
    BandPartition(int host_count, std::vector<int> component_ids);

    int component_of(int host, Terminal t) const;
    bool same_component(int host_a, Terminal ta, int host_b, Terminal tb) const;
    int component_count() const { return component_count_; }
    int host_count() const { return host_count_; }

private:
    int host_count_;
    int component_count_;
    std::vector<int> ids_; // host * 5 + terminal
};

BandPartition propagate_band(const FabricState& state, Band band);

struct IsolationViolation {
    std::string message;
};

struct IsolationReport {
    std::vector<IsolationViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Audits a configured fabric against the round it is supposed to run:
//  - in the noise band, each loop's facing units (right unit of its left
//    endpoint, left unit of its right endpoint) share a component holding
//    no other exchange unit;
//  - no two units ever meet outside a scheduled loop;
//  - no power port is reachable in the noise band;
//  - in the power band, every power port reaches the line and the line is
//    continuous end to end.
// Works for any mode vector, so deliberate misconfigurations are reported
// rather than rejected.
IsolationReport verify_round_isolation(const FabricState& state, const Round& round);

} // namespace kljn
