#include "kljn/serial.hpp"

#include <iomanip>
#include <sstream>

namespace kljn {

Json schedule_to_json(const Schedule& schedule) {
    Json doc;
    doc["schema_version"] = schema_version;
    doc["n"] = schedule.network.size_n;
    doc["segment_length_m"] = schedule.network.segment_length_m;
    doc["total_rounds"] = schedule.total_rounds();
    Json phases = Json::array();
    for (const auto& phase : schedule.phases) {
        Json p;
        p["distance"] = phase.distance;
        Json rounds = Json::array();
        for (const auto& round : phase.rounds) {
            Json loops = Json::array();
            for (const auto& loop : round.loops)
                loops.push_back({{"left", loop.left()}, {"right", loop.right()}});
            rounds.push_back(std::move(loops));
        }
        p["rounds"] = std::move(rounds);
        phases.push_back(std::move(p));
    }
    doc["phases"] = std::move(phases);
    return doc;
}

void write_schedule_csv(std::ostream& out, const Schedule& schedule) {
    out << "phase_distance,round_index,loop_left,loop_right\n";
    for (const auto& phase : schedule.phases)
        for (std::size_t r = 0; r < phase.rounds.size(); ++r)
            for (const auto& loop : phase.rounds[r].loops)
                out << phase.distance << ',' << r << ',' << loop.left() << ','
                    << loop.right() << '\n';
}

namespace {

const char* violation_kind_name(ScheduleViolationKind kind) {
    switch (kind) {
        case ScheduleViolationKind::overlap: return "overlap";
        case ScheduleViolationKind::missing_pair: return "missing_pair";
        case ScheduleViolationKind::duplicate_pair: return "duplicate_pair";
        case ScheduleViolationKind::count_mismatch: return "count_mismatch";
    }
    return "unknown";
}

Json flags_to_json(const FilterFlags& f) {
    return {{"kljn", f.passes_kljn}, {"power", f.passes_power}};
}

const char* slot_class_name(SlotClass c) {
    switch (c) {
        case SlotClass::secure_bit: return "secure_bit";
        case SlotClass::discard_same: return "discard_same";
        case SlotClass::indeterminate: return "indeterminate";
    }
    return "unknown";
}

} // namespace

Json schedule_report_to_json(const ScheduleReport& report) {
    Json doc;
    doc["schema_version"] = schema_version;
    doc["clean"] = report.clean();
    Json violations = Json::array();
    for (const auto& v : report.violations)
        violations.push_back(
            {{"kind", violation_kind_name(v.kind)}, {"message", v.message}});
    doc["violations"] = std::move(violations);
    return doc;
}

Json fabric_state_to_json(const FabricState& state) {
    Json doc;
    doc["schema_version"] = schema_version;
    doc["n"] = state.network.size_n;
    Json hosts = Json::array();
    for (std::size_t h = 0; h < state.modes.size(); ++h) {
        const FilterBoxConfig cfg = box_config(state.modes[h]);
        Json entry;
        entry["host"] = h;
        entry["mode"] = state.modes[h] == HostMode::state1 ? "state1" : "state2";
        entry["filters"] = {{"a", flags_to_json(cfg.a)},
                            {"b", flags_to_json(cfg.b)},
                            {"c", flags_to_json(cfg.c)},
                            {"d", flags_to_json(cfg.d)},
                            {"e", flags_to_json(cfg.e)}};
        hosts.push_back(std::move(entry));
    }
    doc["hosts"] = std::move(hosts);
    return doc;
}

Json isolation_report_to_json(const IsolationReport& report) {
    Json doc;
    doc["schema_version"] = schema_version;
    doc["clean"] = report.clean();
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(v.message);
    doc["violations"] = std::move(violations);
    return doc;
}

Json exchange_report_to_json(const ExchangeReport& report, bool include_keys) {
    Json doc;
    doc["left"] = report.loop.left();
    doc["right"] = report.loop.right();
    doc["distance"] = report.loop.distance();
    doc["key_bits"] = static_cast<long>(report.key_a.size());
    doc["slots_total"] = report.slots_total;
    doc["secure_bits"] = report.secure_bits;
    doc["discarded_same"] = report.discarded_same;
    doc["anomalies"] = report.anomalies;
    doc["false_secure"] = report.false_secure;
    doc["bit_errors"] = report.bit_errors;
    doc["ber"] = report.ber;
    doc["keys_match"] = report.bit_errors == 0;
    doc["key_fingerprint_a"] = key_fingerprint(report.key_a);
    doc["key_fingerprint_b"] = key_fingerprint(report.key_b);
    if (include_keys) {
        doc["key_a"] = bits_to_string(report.key_a);
        doc["key_b"] = bits_to_string(report.key_b);
    }
    return doc;
}

void write_slot_trace_csv(std::ostream& out, const ExchangeReport& report) {
    out << "slot,bit_a,bit_b,r_estimate,classification\n";
    for (const auto& t : report.trace)
        out << t.slot << ',' << t.bit_a << ',' << t.bit_b << ','
            << std::setprecision(17) << t.r_estimate << ','
            << slot_class_name(t.classification) << '\n';
}

Json guess_result_to_json(const GuessResult& result) {
    static const char* stat_names[] = {"r_estimate", "u_mean_square", "i_mean_square"};
    Json doc;
    doc["accuracy"] = result.accuracy;
    doc["ci99_low"] = result.ci_low;
    doc["ci99_high"] = result.ci_high;
    doc["chance_within_ci"] = result.ci_low <= 0.5 && 0.5 <= result.ci_high;
    doc["evaluated"] = result.evaluated;
    doc["statistic"] = stat_names[result.statistic];
    doc["threshold"] = result.threshold;
    doc["predict_above"] = result.predict_above;
    return doc;
}

Json indistinguishability_to_json(const IndistinguishabilityReport& report) {
    auto one = [](const RankSumResult& r) {
        return Json{{"p_value", r.p_value},
                    {"z", r.z},
                    {"auc", r.auc},
                    {"n1", r.n1},
                    {"n2", r.n2}};
    };
    return Json{{"u_mean_square", one(report.u2)}, {"i_mean_square", one(report.i2)}};
}

std::string bits_to_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::string key_fingerprint(const std::vector<std::uint8_t>& bits) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (std::uint8_t b : bits) {
        h ^= static_cast<std::uint64_t>(b ? '1' : '0');
        h *= 0x100000001B3ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

} // namespace kljn
