// Command-line front end: schedule generation, full-network simulation,
// filter fabric verification, and analysis tables. Exit codes: 0 ok,
// 1 verification or security failure, 2 usage error, 3 I/O error.

#include "kljn/adversary.hpp"
#include "kljn/exchange.hpp"
#include "kljn/filter_fabric.hpp"
#include "kljn/grid.hpp"
#include "kljn/rng.hpp"
#include "kljn/schedule.hpp"
#include "kljn/serial.hpp"
#include "kljn/stats.hpp"
#include "kljn/timing.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + path);
    return f;
}

void emit(const kljn::Json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        auto f = open_output(out_path);
        f << doc.dump(2) << '\n';
        if (!f) throw IoError("write failed: " + out_path);
    }
}

kljn::Json load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config file: " + path);
    kljn::Json doc;
    try {
        f >> doc;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    return doc;
}

template <typename T>
void merge(const CLI::Option* opt, const kljn::Json& cfg, const char* key, T& target) {
    if (opt->count() == 0 && cfg.contains(key)) target = cfg.at(key).get<T>();
}

// Options shared by every subcommand that runs or prices an exchange.
struct NoiseOpts {
    kljn::NoiseParams params;
    double segment_length = 1000.0;
    CLI::Option* t_eff = nullptr;
    CLI::Option* b_kljn = nullptr;
    CLI::Option* r_low = nullptr;
    CLI::Option* r_high = nullptr;
    CLI::Option* window = nullptr;
    CLI::Option* segment = nullptr;

    void attach(CLI::App* cmd) {
        t_eff = cmd->add_option("--t-eff", params.t_eff, "effective noise temperature [K]");
        b_kljn = cmd->add_option("--b-kljn", params.b_kljn, "noise bandwidth [Hz]");
        r_low = cmd->add_option("--r-low", params.r_low, "bit-0 resistor [ohm]");
        r_high = cmd->add_option("--r-high", params.r_high, "bit-1 resistor [ohm]");
        window = cmd->add_option("--window-factor", params.window_factor,
                                 "correlation times per measurement slot");
        segment = cmd->add_option("--segment-length", segment_length,
                                  "wire segment length [m]");
    }
    void merge_config(const kljn::Json& cfg) {
        merge(t_eff, cfg, "t_eff", params.t_eff);
        merge(b_kljn, cfg, "b_kljn", params.b_kljn);
        merge(r_low, cfg, "r_low", params.r_low);
        merge(r_high, cfg, "r_high", params.r_high);
        merge(window, cfg, "window_factor", params.window_factor);
        merge(segment, cfg, "segment_length_m", segment_length);
    }
    kljn::Json to_json(int n) const {
        kljn::Json j;
        j["n"] = n;
        j["t_eff"] = params.t_eff;
        j["b_kljn"] = params.b_kljn;
        j["r_low"] = params.r_low;
        j["r_high"] = params.r_high;
        j["window_factor"] = params.window_factor;
        j["segment_length_m"] = segment_length;
        return j;
    }
};

// ---------------------------------------------------------------- schedule

struct ScheduleArgs {
    int n = 0;
    double segment_length = 1000.0;
    std::string format = "json";
    std::string out;
    std::string config;
    CLI::Option* n_opt = nullptr;
    CLI::Option* segment_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* out_opt = nullptr;
};

int run_schedule(const ScheduleArgs& args) {
    const kljn::Network net(args.n, args.segment_length);
    const kljn::Schedule schedule = kljn::full_schedule(net);
    const kljn::ScheduleReport report = kljn::verify_schedule(schedule);
    if (!report.clean()) {
        for (const auto& v : report.violations)
            std::cerr << "schedule violation: " << v.message << '\n';
        return exit_verification;
    }

    if (args.format == "csv") {
        if (args.out.empty()) {
            kljn::write_schedule_csv(std::cout, schedule);
        } else {
            auto f = open_output(args.out);
            kljn::write_schedule_csv(f, schedule);
            if (!f) throw IoError("write failed: " + args.out);
        }
    } else {
        emit(kljn::schedule_to_json(schedule), args.out);
    }
    if (!args.out.empty())
        std::cout << "n=" << args.n << " rounds=" << schedule.total_rounds()
                  << " closed_form=" << kljn::ke_count_closed_form(args.n) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    int n = 0;
    std::uint64_t seed = 0;
    int key_bits = 100;
    NoiseOpts noise;
    std::string out;
    std::string secrets_out;
    std::string trace_out;
    std::string config;
    CLI::Option* n_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* key_opt = nullptr;
};

struct EveCollector {
    std::vector<kljn::EveObservation> mixed;
    std::vector<int> labels; // 1 = low resistor at the left end
    std::vector<kljn::EveObservation> lh, hl;
    long slots = 0;

    void add(const kljn::ChannelRecord& rec, const kljn::NoiseParams& params) {
        const auto obs = kljn::eve_observe(rec, params, slots++);
        const auto [a, b] = rec.truth_bits();
        if (a == b) return;
        mixed.push_back(obs);
        labels.push_back(a == 0 ? 1 : 0);
        (a == 0 ? lh : hl).push_back(obs);
    }
};

int run_simulate(const SimulateArgs& args) {
    const kljn::Network net(args.n, args.noise.segment_length);
    const kljn::NoiseParams& params = args.noise.params;
    params.validate();
    if (args.key_bits < 1) throw std::invalid_argument("--key-bits must be at least 1");

    const kljn::Schedule schedule = kljn::full_schedule(net);
    const kljn::ScheduleReport sched_report = kljn::verify_schedule(schedule);
    if (!sched_report.clean()) {
        for (const auto& v : sched_report.violations)
            std::cerr << "schedule violation: " << v.message << '\n';
        return exit_verification;
    }

    EveCollector eve;
    kljn::Json pairs = kljn::Json::array();
    kljn::Json secrets = kljn::Json::array();
    std::ostringstream trace;
    if (!args.trace_out.empty())
        trace << "pair_left,pair_right,slot,bit_a,bit_b,r_estimate,classification\n";

    long rounds_checked = 0;
    long secure_total = 0, error_total = 0;
    double simulated_total_s = 0.0;
    const double slot_s = params.slot_duration_s();
    bool all_match = true;

    for (const auto& phase : schedule.phases) {
        for (std::size_t r = 0; r < phase.rounds.size(); ++r) {
            const kljn::Round& round = phase.rounds[r];
            const kljn::FabricState state = kljn::modes_for_round(net, round);
            const kljn::IsolationReport iso = kljn::verify_round_isolation(state, round);
            ++rounds_checked;
            if (!iso.clean()) {
                for (const auto& v : iso.violations)
                    std::cerr << "isolation violation (distance " << phase.distance
                              << " round " << r << "): " << v.message << '\n';
                return exit_verification;
            }

            long round_max_slots = 0;
            for (const kljn::Loop& loop : round.loops) {
                std::mt19937_64 engine(kljn::derive_seed(
                    args.seed, static_cast<std::uint64_t>(phase.distance),
                    static_cast<std::uint64_t>(r),
                    static_cast<std::uint64_t>(loop.left())));
                const bool want_trace = !args.trace_out.empty();
                const kljn::ExchangeReport report = kljn::exchange_key(
                    loop, args.key_bits, params, engine, want_trace,
                    [&](const kljn::ChannelRecord& rec, const kljn::SlotOutcome&,
                        long) { eve.add(rec, params); });

                kljn::Json entry = kljn::exchange_report_to_json(report);
                entry["phase_distance"] = phase.distance;
                entry["round_index"] = r;
                pairs.push_back(std::move(entry));

                if (!args.secrets_out.empty())
                    secrets.push_back({{"left", loop.left()},
                                       {"right", loop.right()},
                                       {"key_a", kljn::bits_to_string(report.key_a)},
                                       {"key_b", kljn::bits_to_string(report.key_b)}});
                if (want_trace)
                    for (const auto& t : report.trace)
                        trace << loop.left() << ',' << loop.right() << ',' << t.slot
                              << ',' << t.bit_a << ',' << t.bit_b << ','
                              << t.r_estimate << ','
                              << (t.classification == kljn::SlotClass::secure_bit
                                      ? "secure_bit"
                                      : t.classification == kljn::SlotClass::discard_same
                                            ? "discard_same"
                                            : "indeterminate")
                              << '\n';

                secure_total += report.secure_bits;
                error_total += report.bit_errors;
                all_match = all_match && report.bit_errors == 0;
                round_max_slots = std::max(round_max_slots, report.slots_total);
            }
            simulated_total_s += static_cast<double>(round_max_slots) * slot_s;
        }
    }

    kljn::Json doc;
    doc["schema_version"] = kljn::schema_version;
    doc["command"] = "simulate";
    doc["config"] = args.noise.to_json(args.n);
    doc["config"]["seed"] = args.seed;
    doc["config"]["key_bits"] = args.key_bits;

    doc["schedule"] = {{"total_rounds", schedule.total_rounds()},
                       {"closed_form", kljn::ke_count_closed_form(args.n)},
                       {"match", schedule.total_rounds() ==
                                     kljn::ke_count_closed_form(args.n)}};
    doc["isolation"] = {{"rounds_checked", rounds_checked}, {"clean", true}};

    const kljn::BandwidthCheck bw =
        kljn::validate_bandwidth(params.b_kljn, net.loop_length_m(net.size_n));
    doc["bandwidth"] = {{"longest_loop_m", bw.loop_length_m},
                        {"limit_hz", bw.limit_hz},
                        {"b_kljn", bw.requested_hz},
                        {"ok", bw.ok}};

    doc["pairs"] = std::move(pairs);
    const double aggregate_ber =
        secure_total == 0 ? 0.0
                          : static_cast<double>(error_total) /
                                static_cast<double>(secure_total);
    doc["summary"] = {{"pair_count", doc["pairs"].size()},
                      {"secure_bits", secure_total},
                      {"bit_errors", error_total},
                      {"aggregate_ber", aggregate_ber},
                      {"all_pairs_match", all_match}};

    kljn::Json eve_doc;
    eve_doc["mixed_slots"] = static_cast<long>(eve.mixed.size());
    eve_doc["lh_count"] = static_cast<long>(eve.lh.size());
    eve_doc["hl_count"] = static_cast<long>(eve.hl.size());
    if (!eve.lh.empty() && !eve.hl.empty())
        eve_doc["indistinguishability"] =
            kljn::indistinguishability_to_json(kljn::indistinguishability_test(eve.lh, eve.hl));
    else
        eve_doc["indistinguishability"] = nullptr;
    if (eve.mixed.size() >= 1000)
        eve_doc["guess"] = kljn::guess_result_to_json(
            kljn::eve_guess_mixed_ordering(eve.mixed, eve.labels));
    else
        eve_doc["guess"] = nullptr;
    doc["eve"] = std::move(eve_doc);

    const kljn::TimingModel tm = kljn::make_timing_model(params, args.key_bits);
    doc["timing"] = {{"tau_s", tm.tau_s},
                     {"slot_s", tm.slot_s},
                     {"bit_exchange_avg_s", tm.bit_exchange_avg_s},
                     {"ke_duration_s", tm.ke_duration_s},
                     {"model_total_s", kljn::network_key_distribution_time(
                                           args.n, params, args.key_bits)},
                     {"simulated_total_s", simulated_total_s}};

    emit(doc, args.out);
    if (!args.secrets_out.empty()) {
        kljn::Json sdoc;
        sdoc["schema_version"] = kljn::schema_version;
        sdoc["pairs"] = std::move(secrets);
        emit(sdoc, args.secrets_out);
    }
    if (!args.trace_out.empty()) {
        auto f = open_output(args.trace_out);
        f << trace.str();
        if (!f) throw IoError("write failed: " + args.trace_out);
    }
    if (!args.out.empty())
        std::cout << "pairs=" << doc["summary"]["pair_count"]
                  << " all_match=" << (all_match ? "true" : "false")
                  << " aggregate_ber=" << aggregate_ber
                  << " model_total_s=" << doc["timing"]["model_total_s"]
                  << '\n';
    return exit_ok;
}

// ------------------------------------------------------------ verify-filters

struct VerifyFiltersArgs {
    int n = 0;
    double segment_length = 1000.0;
    std::string out;
    std::string dump_state;
    int dump_distance = 1;
    int dump_round = 0;
};

int run_verify_filters(const VerifyFiltersArgs& args) {
    const kljn::Network net(args.n, args.segment_length);
    const kljn::Schedule schedule = kljn::full_schedule(net);

    long rounds_checked = 0;
    kljn::Json failures = kljn::Json::array();
    for (const auto& phase : schedule.phases) {
        for (std::size_t r = 0; r < phase.rounds.size(); ++r) {
            const kljn::FabricState state =
                kljn::modes_for_round(net, phase.rounds[r]);
            const kljn::IsolationReport rep =
                kljn::verify_round_isolation(state, phase.rounds[r]);
            ++rounds_checked;
            if (!rep.clean()) {
                kljn::Json f;
                f["distance"] = phase.distance;
                f["round"] = r;
                f["report"] = kljn::isolation_report_to_json(rep);
                failures.push_back(std::move(f));
            }
        }
    }

    if (!args.dump_state.empty()) {
        const auto rounds = kljn::rounds_for_distance(net, args.dump_distance);
        if (args.dump_round < 0 ||
            args.dump_round >= static_cast<int>(rounds.size()))
            throw std::invalid_argument("--round out of range for --distance");
        const kljn::FabricState state = kljn::modes_for_round(
            net, rounds[static_cast<std::size_t>(args.dump_round)]);
        emit(kljn::fabric_state_to_json(state), args.dump_state);
    }

    const bool clean = failures.empty();
    if (!args.out.empty()) {
        kljn::Json doc;
        doc["schema_version"] = kljn::schema_version;
        doc["command"] = "verify-filters";
        doc["n"] = args.n;
        doc["rounds_checked"] = rounds_checked;
        doc["clean"] = clean;
        doc["failures"] = std::move(failures);
        emit(doc, args.out);
    } else if (!clean) {
        for (const auto& f : failures)
            for (const auto& msg : f["report"]["violations"])
                std::cerr << "isolation violation (distance " << f["distance"]
                          << " round " << f["round"]
                          << "): " << msg.get<std::string>() << '\n';
    }
    std::cout << "rounds=" << rounds_checked << " clean="
              << (clean ? rounds_checked : rounds_checked - static_cast<long>(failures.size()))
              << " violations=" << failures.size() << '\n';
    return clean ? exit_ok : exit_verification;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
    bool timing = false;
    bool eve = false;
    bool per_distance = false;
    int n = 0;
    int n_max = 20;
    int key_bits = 100;
    long slots = 10000;
    int reps = 0;
    std::uint64_t seed = 1;
    NoiseOpts noise;
    std::string format = "json";
    std::string out;
    std::string config;
    CLI::Option* n_opt = nullptr;
    CLI::Option* key_opt = nullptr;
};

int run_analyze_counts(const AnalyzeArgs& args) {
    bool all_match = true;
    kljn::Json rows = kljn::Json::array();
    std::ostringstream csv;
    csv << "n,enumerated,closed_form,match\n";
    for (int n = 1; n <= args.n_max; ++n) {
        const kljn::Network net(n, args.noise.segment_length);
        const long enumerated = kljn::full_schedule(net).total_rounds();
        const long closed = kljn::ke_count_closed_form(n);
        const bool match = enumerated == closed;
        all_match = all_match && match;
        rows.push_back({{"n", n},
                        {"enumerated", enumerated},
                        {"closed_form", closed},
                        {"match", match}});
        csv << n << ',' << enumerated << ',' << closed << ','
            << (match ? "true" : "false") << '\n';
    }

    if (args.format == "csv") {
        if (args.out.empty()) {
            std::cout << csv.str();
        } else {
            auto f = open_output(args.out);
            f << csv.str();
        }
    } else {
        kljn::Json doc;
        doc["schema_version"] = kljn::schema_version;
        doc["command"] = "analyze-counts";
        doc["rows"] = std::move(rows);
        doc["all_match"] = all_match;
        emit(doc, args.out);
    }
    return all_match ? exit_ok : exit_verification;
}

int run_analyze_timing(const AnalyzeArgs& args) {
    const int lo = args.n_opt->count() ? args.n : 1;
    const int hi = args.n_opt->count() ? args.n : args.n_max;

    kljn::Json rows = kljn::Json::array();
    std::ostringstream csv;
    csv << "n,ke_count,ke_duration_s,total_s\n";
    for (int n = lo; n <= hi; ++n) {
        const kljn::Network net(n, args.noise.segment_length);
        const long count = kljn::ke_count_closed_form(n);
        const double ke_s = kljn::ke_duration(args.noise.params, args.key_bits);
        const double total_s =
            kljn::network_key_distribution_time(n, args.noise.params, args.key_bits);
        csv << n << ',' << count << ',' << ke_s << ',' << total_s << '\n';

        kljn::Json row;
        row["n"] = n;
        row["ke_count"] = count;
        row["ke_duration_s"] = ke_s;
        row["total_s"] = total_s;
        const kljn::BandwidthCheck bw = kljn::validate_bandwidth(
            args.noise.params.b_kljn, net.loop_length_m(n));
        row["bandwidth_ok"] = bw.ok;
        row["bandwidth_limit_hz"] = bw.limit_hz;
        if (args.per_distance)
            row["per_distance_total_s"] = kljn::per_distance_distribution_time(
                net, args.noise.params, args.key_bits);
        rows.push_back(std::move(row));
    }

    if (args.format == "csv") {
        if (args.out.empty()) {
            std::cout << csv.str();
        } else {
            auto f = open_output(args.out);
            f << csv.str();
        }
    } else {
        kljn::Json doc;
        doc["schema_version"] = kljn::schema_version;
        doc["command"] = "analyze-timing";
        doc["key_bits"] = args.key_bits;
        doc["b_kljn"] = args.noise.params.b_kljn;
        doc["rows"] = std::move(rows);
        emit(doc, args.out);
    }
    return exit_ok;
}

int run_analyze_eve(const AnalyzeArgs& args) {
    const kljn::NoiseParams& params = args.noise.params;
    params.validate();
    if (args.slots < 2) throw std::invalid_argument("--slots must be at least 2");

    std::mt19937_64 engine(kljn::derive_seed(args.seed, 0xE5E, 0, 0));
    std::vector<kljn::EveObservation> mixed, lh, hl;
    std::vector<int> labels;
    mixed.reserve(static_cast<std::size_t>(args.slots));
    for (long s = 0; s < args.slots; ++s) {
        const int low_left = static_cast<int>(engine() & 1u);
        const int a = low_left ? 0 : 1;
        const kljn::ChannelRecord rec =
            kljn::simulate_slot(a, 1 - a, params, engine);
        const auto obs = kljn::eve_observe(rec, params, s);
        mixed.push_back(obs);
        labels.push_back(low_left);
        (low_left ? lh : hl).push_back(obs);
    }

    kljn::Json doc;
    doc["schema_version"] = kljn::schema_version;
    doc["command"] = "analyze-eve";
    doc["slots"] = args.slots;
    doc["seed"] = args.seed;

    bool secure = true;
    if (mixed.size() >= 1000) {
        const kljn::GuessResult guess = kljn::eve_guess_mixed_ordering(mixed, labels);
        doc["guess"] = kljn::guess_result_to_json(guess);
        secure = guess.ci_low <= 0.5 && 0.5 <= guess.ci_high;
    } else {
        doc["guess"] = nullptr;
    }
    if (!lh.empty() && !hl.empty())
        doc["indistinguishability"] =
            kljn::indistinguishability_to_json(kljn::indistinguishability_test(lh, hl));
    else
        doc["indistinguishability"] = nullptr;

    if (args.reps > 0) {
        // Level calibration: fresh 500-vs-500 collections per repetition,
        // counting rejections of the rank test at alpha = 0.01.
        const double alpha = 0.01;
        long u2_rejections = 0, i2_rejections = 0;
        for (int rep = 0; rep < args.reps; ++rep) {
            std::mt19937_64 rep_engine(kljn::derive_seed(
                args.seed, 0xCA11B, static_cast<std::uint64_t>(rep), 1));
            std::vector<kljn::EveObservation> rl, rh;
            for (int s = 0; s < 500; ++s)
                rl.push_back(kljn::eve_observe(
                    kljn::simulate_slot(0, 1, params, rep_engine), params, s));
            for (int s = 0; s < 500; ++s)
                rh.push_back(kljn::eve_observe(
                    kljn::simulate_slot(1, 0, params, rep_engine), params, s));
            const auto rep_result = kljn::indistinguishability_test(rl, rh);
            if (rep_result.u2.p_value < alpha) ++u2_rejections;
            if (rep_result.i2.p_value < alpha) ++i2_rejections;
        }
        doc["calibration"] = {{"reps", args.reps},
                              {"alpha", alpha},
                              {"u2_rejections", u2_rejections},
                              {"i2_rejections", i2_rejections}};
    }

    emit(doc, args.out);
    return secure ? exit_ok : exit_verification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"KLJN key distribution over a power-line chain: scheduling, "
                 "noise simulation, filter verification, analysis"};
    app.require_subcommand(1);

    ScheduleArgs sched;
    CLI::App* sched_cmd =
        app.add_subcommand("schedule", "emit the full pairing schedule");
    sched.n_opt = sched_cmd->add_option("--n", sched.n, "network size (hosts - 1)")
                      ->check(CLI::PositiveNumber);
    sched.segment_opt =
        sched_cmd->add_option("--segment-length", sched.segment_length,
                              "wire segment length [m]");
    sched.format_opt = sched_cmd->add_option("--format", sched.format)
                           ->check(CLI::IsMember({"json", "csv"}));
    sched.out_opt = sched_cmd->add_option("--out", sched.out, "output file");
    sched_cmd->add_option("--config", sched.config, "JSON config file");

    SimulateArgs sim;
    CLI::App* sim_cmd =
        app.add_subcommand("simulate", "run every pairwise exchange of a full schedule");
    sim.n_opt = sim_cmd->add_option("--n", sim.n, "network size (hosts - 1)")
                    ->check(CLI::PositiveNumber);
    sim.seed_opt = sim_cmd->add_option("--seed", sim.seed, "master seed");
    sim.key_opt = sim_cmd->add_option("--key-bits", sim.key_bits, "secure bits per pair");
    sim.noise.attach(sim_cmd);
    sim_cmd->add_option("--out", sim.out, "artifact file (stdout if omitted)");
    sim_cmd->add_option("--emit-secrets", sim.secrets_out,
                        "also write raw key bits to this file");
    sim_cmd->add_option("--trace", sim.trace_out, "per-slot CSV trace file");
    sim_cmd->add_option("--config", sim.config, "JSON config file");

    VerifyFiltersArgs vf;
    CLI::App* vf_cmd = app.add_subcommand(
        "verify-filters", "audit fabric isolation for every round of a schedule");
    vf_cmd->add_option("--n", vf.n, "network size (hosts - 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    vf_cmd->add_option("--segment-length", vf.segment_length);
    vf_cmd->add_option("--out", vf.out, "JSON report file");
    vf_cmd->add_option("--dump-state", vf.dump_state,
                       "write one round's fabric state as JSON");
    vf_cmd->add_option("--distance", vf.dump_distance, "distance for --dump-state");
    vf_cmd->add_option("--round", vf.dump_round, "round index for --dump-state");

    AnalyzeArgs an;
    CLI::App* an_cmd =
        app.add_subcommand("analyze", "count, timing, and adversary tables");
    an_cmd->add_flag("--timing", an.timing, "emit the timing table");
    an_cmd->add_flag("--eve", an.eve, "run the eavesdropper campaign");
    an_cmd->add_flag("--per-distance", an.per_distance,
                     "add the per-distance bandwidth what-if column (JSON only)");
    an.n_opt = an_cmd->add_option("--n", an.n, "single network size")
                   ->check(CLI::PositiveNumber);
    an_cmd->add_option("--n-max", an.n_max, "table upper bound")
        ->check(CLI::PositiveNumber);
    an.key_opt = an_cmd->add_option("--key-bits", an.key_bits, "secure bits per pair");
    an_cmd->add_option("--slots", an.slots, "mixed slots for --eve");
    an_cmd->add_option("--reps", an.reps, "rank-test calibration repetitions for --eve");
    an_cmd->add_option("--seed", an.seed, "campaign seed for --eve");
    an.noise.attach(an_cmd);
    an_cmd->add_option("--format", an.format)->check(CLI::IsMember({"json", "csv"}));
    an_cmd->add_option("--out", an.out, "output file");
    an_cmd->add_option("--config", an.config, "JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (sched_cmd->parsed()) {
            if (!sched.config.empty()) {
                const kljn::Json cfg = load_config(sched.config);
                merge(sched.n_opt, cfg, "n", sched.n);
                merge(sched.segment_opt, cfg, "segment_length_m", sched.segment_length);
                merge(sched.format_opt, cfg, "format", sched.format);
                merge(sched.out_opt, cfg, "out", sched.out);
            }
            if (sched.n < 1)
                throw std::invalid_argument("schedule requires --n >= 1");
            return run_schedule(sched);
        }
        if (sim_cmd->parsed()) {
            bool have_seed = sim.seed_opt->count() > 0;
            if (!sim.config.empty()) {
                const kljn::Json cfg = load_config(sim.config);
                merge(sim.n_opt, cfg, "n", sim.n);
                merge(sim.key_opt, cfg, "key_bits", sim.key_bits);
                if (!have_seed && cfg.contains("seed")) {
                    sim.seed = cfg.at("seed").get<std::uint64_t>();
                    have_seed = true;
                }
                sim.noise.merge_config(cfg);
            }
            if (!have_seed)
                throw std::invalid_argument("simulate requires an explicit --seed");
            if (sim.n < 1) throw std::invalid_argument("simulate requires --n >= 1");
            return run_simulate(sim);
        }
        if (vf_cmd->parsed()) return run_verify_filters(vf);
        if (an_cmd->parsed()) {
            if (!an.config.empty()) {
                const kljn::Json cfg = load_config(an.config);
                merge(an.key_opt, cfg, "key_bits", an.key_bits);
                an.noise.merge_config(cfg);
            }
            if (an.timing) return run_analyze_timing(an);
            if (an.eve) return run_analyze_eve(an);
            return run_analyze_counts(an);
        }
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_verification;
    }
    return exit_usage;
}
