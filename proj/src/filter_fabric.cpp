#include "kljn/filter_fabric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kljn {

FilterBoxConfig box_config(HostMode mode) {
    if (mode == HostMode::state1) {
        return {mode,
                /*a*/ {true, true},   // through line shorted
                /*b*/ {false, false}, // exchange units disconnected
                /*c*/ {true, false},  // noise band bypasses the power tap
                /*d*/ {false, true},
                /*e*/ {false, true}};
    }
    return {mode,
            /*a*/ {false, true},  // line split in the noise band
            /*b*/ {true, false},  // units coupled to their line sides
            /*c*/ {false, false},
            /*d*/ {false, true},
            /*e*/ {false, true}};
}

FabricState modes_for_round(const Network& net, const Round& round) {
    for (const auto& loop : round.loops)
        if (loop.right() > net.size_n)
            throw std::invalid_argument("loop extends past the last host");
    if (!pairwise_non_overlapping(round.loops))
        throw std::domain_error("round contains overlapping loops");

    FabricState state{net, std::vector<HostMode>(
                               static_cast<std::size_t>(net.host_count()),
                               HostMode::state1)};
    for (const auto& loop : round.loops) {
        state.modes[static_cast<std::size_t>(loop.left())] = HostMode::state2;
        state.modes[static_cast<std::size_t>(loop.right())] = HostMode::state2;
    }
    return state;
}

namespace {

// Internal node layout per host; the two tap nodes stay private to the
// propagation, public queries see the five named terminals.
enum InternalNode : int {
    node_line_left = 0,
    node_tap_left = 1,
    node_tap_right = 2,
    node_line_right = 3,
    node_kljn_left = 4,
    node_kljn_right = 5,
    node_power = 6,
    nodes_per_host = 7,
};

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

int internal_index(int host, InternalNode node) {
    return host * nodes_per_host + node;
}

InternalNode internal_of(Terminal t) {
    switch (t) {
        case Terminal::line_left: return node_line_left;
        case Terminal::line_right: return node_line_right;
        case Terminal::kljn_left: return node_kljn_left;
        case Terminal::kljn_right: return node_kljn_right;
        case Terminal::power_port: return node_power;
    }
    throw std::logic_error("unknown terminal");
}

constexpr Terminal all_terminals[] = {
    Terminal::line_left, Terminal::line_right, Terminal::kljn_left,
    Terminal::kljn_right, Terminal::power_port};

} // namespace

BandPartition::BandPartition(int host_count, std::vector<int> component_ids)
    : host_count_(host_count), component_count_(0), ids_(std::move(component_ids)) {
    for (int id : ids_) component_count_ = std::max(component_count_, id + 1);
}

int BandPartition::component_of(int host, Terminal t) const {
    if (host < 0 || host >= host_count_)
        throw std::invalid_argument("host index out of range");
    return ids_[static_cast<std::size_t>(host * 5 + static_cast<int>(t))];
}

bool BandPartition::same_component(int host_a, Terminal ta, int host_b,
                                   Terminal tb) const {
    return component_of(host_a, ta) == component_of(host_b, tb);
}

BandPartition propagate_band(const FabricState& state, Band band) {
    const int hosts = state.network.host_count();
    if (static_cast<int>(state.modes.size()) != hosts)
        throw std::invalid_argument("mode vector does not match host count");

    Dsu dsu(hosts * nodes_per_host);
    for (int h = 0; h < hosts; ++h) {
        const FilterBoxConfig cfg = box_config(state.modes[static_cast<std::size_t>(h)]);
        if (cfg.a.passes(band)) {
            dsu.unite(internal_index(h, node_line_left), internal_index(h, node_tap_left));
            dsu.unite(internal_index(h, node_tap_right), internal_index(h, node_line_right));
        }
        if (cfg.b.passes(band)) {
            dsu.unite(internal_index(h, node_line_left), internal_index(h, node_kljn_left));
            dsu.unite(internal_index(h, node_line_right), internal_index(h, node_kljn_right));
        }
        if (cfg.c.passes(band))
            dsu.unite(internal_index(h, node_tap_left), internal_index(h, node_tap_right));
        if (cfg.d.passes(band))
            dsu.unite(internal_index(h, node_tap_left), internal_index(h, node_power));
        if (cfg.e.passes(band))
            dsu.unite(internal_index(h, node_tap_right), internal_index(h, node_power));
    }
    // Plain wire segments between neighbors carry both bands.
    for (int h = 0; h + 1 < hosts; ++h)
        dsu.unite(internal_index(h, node_line_right), internal_index(h + 1, node_line_left));

    std::vector<int> ids(static_cast<std::size_t>(hosts) * 5, -1);
    std::map<int, int> dense;
    for (int h = 0; h < hosts; ++h) {
        for (Terminal t : all_terminals) {
            const int root = dsu.find(internal_index(h, internal_of(t)));
            const auto it = dense.emplace(root, static_cast<int>(dense.size())).first;
            ids[static_cast<std::size_t>(h * 5 + static_cast<int>(t))] = it->second;
        }
    }
    return BandPartition(hosts, std::move(ids));
}

IsolationReport verify_round_isolation(const FabricState& state, const Round& round) {
    IsolationReport report;
    const int hosts = state.network.host_count();
    for (const auto& loop : round.loops)
        if (loop.right() >= hosts)
            throw std::invalid_argument("loop extends past the last host");

    const BandPartition noise = propagate_band(state, Band::kljn);
    const BandPartition power = propagate_band(state, Band::power);

    // Gather exchange-unit membership per noise component.
    std::map<int, std::vector<std::pair<int, Terminal>>> units_in;
    for (int h = 0; h < hosts; ++h)
        for (Terminal t : {Terminal::kljn_left, Terminal::kljn_right})
            units_in[noise.component_of(h, t)].emplace_back(h, t);

    std::set<int> loop_components;
    for (const auto& loop : round.loops) {
        const int ca = noise.component_of(loop.left(), Terminal::kljn_right);
        const int cb = noise.component_of(loop.right(), Terminal::kljn_left);
        std::ostringstream id;
        id << "loop (" << loop.left() << "," << loop.right() << ")";
        if (ca != cb) {
            report.violations.push_back(
                {id.str() + ": facing units are not connected in the noise band"});
            continue;
        }
        loop_components.insert(ca);
        if (units_in[ca].size() != 2) {
            std::ostringstream msg;
            msg << id.str() << ": noise component carries "
                << units_in[ca].size() << " exchange units instead of 2";
            report.violations.push_back({msg.str()});
        }
    }

    // Any other meeting of two or more units is an unintended exchange path.
    for (const auto& [comp, members] : units_in) {
        if (members.size() < 2 || loop_components.count(comp)) continue;
        std::ostringstream msg;
        msg << "units of hosts";
        for (const auto& [h, t] : members)
            msg << ' ' << h << (t == Terminal::kljn_left ? "L" : "R");
        msg << " meet in the noise band outside any scheduled loop";
        report.violations.push_back({msg.str()});
    }

    // Power ports must never see the noise band, whether from a unit or from
    // the line itself.
    std::set<int> line_noise_components;
    for (int h = 0; h < hosts; ++h) {
        line_noise_components.insert(noise.component_of(h, Terminal::line_left));
        line_noise_components.insert(noise.component_of(h, Terminal::line_right));
    }
    for (int h = 0; h < hosts; ++h) {
        const int cp = noise.component_of(h, Terminal::power_port);
        if (units_in.count(cp) || line_noise_components.count(cp)) {
            std::ostringstream msg;
            msg << "power port of host " << h << " is reachable in the noise band";
            report.violations.push_back({msg.str()});
        }
    }

    // Power delivery: one continuous line, every port fed from it.
    const int line_comp = power.component_of(0, Terminal::line_left);
    for (int h = 0; h < hosts; ++h) {
        if (power.component_of(h, Terminal::line_left) != line_comp ||
            power.component_of(h, Terminal::line_right) != line_comp) {
            std::ostringstream msg;
            msg << "power line is severed at host " << h;
            report.violations.push_back({msg.str()});
        }
        if (power.component_of(h, Terminal::power_port) != line_comp) {
            std::ostringstream msg;
            msg << "host " << h << " has no power feed";
            report.violations.push_back({msg.str()});
        }
    }

    return report;
}

} // namespace kljn
