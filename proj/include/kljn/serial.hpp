#pragma once

#include "kljn/adversary.hpp"
#include "kljn/exchange.hpp"
#include "kljn/filter_fabric.hpp"
#include "kljn/schedule.hpp"

#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kljn {

// All emitted documents carry this top-level schema_version.
inline constexpr int schema_version = 1;

using Json = nlohmann::ordered_json; // insertion-ordered keys keep output stable

Json schedule_to_json(const Schedule& schedule);
void write_schedule_csv(std::ostream& out, const Schedule& schedule);

Json schedule_report_to_json(const ScheduleReport& report);
Json fabric_state_to_json(const FabricState& state);
Json isolation_report_to_json(const IsolationReport& report);

// Raw key bits are withheld unless include_keys is set; the default output
// carries only lengths and fingerprints.
Json exchange_report_to_json(const ExchangeReport& report, bool include_keys = false);
void write_slot_trace_csv(std::ostream& out, const ExchangeReport& report);

Json guess_result_to_json(const GuessResult& result);
Json indistinguishability_to_json(const IndistinguishabilityReport& report);

std::string bits_to_string(const std::vector<std::uint8_t>& bits);

// FNV-1a over the bit string; a stable label for comparing keys without
// revealing them. Not a cryptographic digest.
std::string key_fingerprint(const std::vector<std::uint8_t>& bits);

} // namespace kljn
