// wordruin: ruin analysis for two-word score games over a Markov letter chain.
//
// Subcommands: analyze, simulate, inspect, check. Reports go to stdout,
// diagnostics to stderr. Exit codes: 0 ok, 2 invalid input, 3 game duration
// not almost surely finite, 4 numeric failure, 5 all trials censored.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordruin/config_io.hpp"
#include "wordruin/game_analysis.hpp"
#include "wordruin/simulator.hpp"

namespace {

using nlohmann::json;
using namespace wordruin;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitPeriodic = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitAllCensored = 5;

json report_to_json(const ValidationReport& report) {
    json j;
    j["failures"] = json::array();
    j["warnings"] = json::array();
    for (const auto& d : report.failures) {
        j["failures"].push_back({{"code", d.code}, {"message", d.message}});
    }
    for (const auto& d : report.warnings) {
        j["warnings"].push_back({{"code", d.code}, {"message", d.message}});
    }
    return j;
}

void print_warnings(const ValidationReport& report) {
    for (const auto& d : report.warnings) {
        std::cerr << "warning " << d.code << ": " << d.message << "\n";
    }
}

// Returns kExitInvalidInput and serializes the report if validation failed.
int validate_or_report(const GameConfig& config, ValidationReport& merged) {
    merged = validate_letter_chain(config.chain);
    if (merged.ok()) {
        const ValidationReport game = validate_game(config.chain, config.spec);
        merged.failures.insert(merged.failures.end(), game.failures.begin(),
                               game.failures.end());
        merged.warnings.insert(merged.warnings.end(), game.warnings.begin(),
                               game.warnings.end());
    }
    if (!merged.ok()) {
        std::cerr << report_to_json(merged).dump(2) << "\n";
        return kExitInvalidInput;
    }
    print_warnings(merged);
    return kExitOk;
}

std::ostream& text_out() {
    std::cout << std::setprecision(17);
    return std::cout;
}

std::string joined_state(const Alphabet& alphabet, const ZState& state) {
    std::string name;
    for (const int c : state.text) name += alphabet.symbols[c];
    return name;
}

int cmd_analyze(const GameConfig& config, bool direct, const std::string& format) {
    ValidationReport report;
    if (const int rc = validate_or_report(config, report)) return rc;

    const GameAnalysis analysis = analyze(config.chain, config.spec);

    json j;
    j["command"] = "analyze";
    j["status"] = to_string(analysis.status);
    if (analysis.alpha) j["alpha"] = *analysis.alpha;
    if (analysis.e_t) j["e_t"] = *analysis.e_t;
    if (analysis.e_tau) j["e_tau"] = *analysis.e_tau;
    j["x_chain"] = {{"q1", analysis.params.q1},
                    {"t11", analysis.params.t11},
                    {"tm1", analysis.params.tm1}};
    j["gamma_moments"] = {{"e_gamma1", analysis.moments.e_gamma1},
                          {"e2_plus", analysis.moments.e2_plus},
                          {"e2_minus", analysis.moments.e2_minus},
                          {"a", analysis.moments.a},
                          {"b", analysis.moments.b}};
    if (direct && analysis.status == GameStatus::Ok) {
        const DirectResult dr = analyze_direct(config.chain, config.spec);
        j["direct"] = {{"alpha", dr.alpha}, {"e_tau", dr.e_tau}};
        j["discrepancy"] = {{"alpha", std::abs(dr.alpha - *analysis.alpha)},
                            {"e_tau", std::abs(dr.e_tau - *analysis.e_tau)}};
    }

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        auto& out = text_out();
        out << "status " << to_string(analysis.status) << "\n";
        if (analysis.alpha) out << "alpha " << *analysis.alpha << "\n";
        if (analysis.e_t) out << "e_t " << *analysis.e_t << "\n";
        if (analysis.e_tau) out << "e_tau " << *analysis.e_tau << "\n";
        out << "q1 " << analysis.params.q1 << "\n"
            << "t11 " << analysis.params.t11 << "\n"
            << "tm1 " << analysis.params.tm1 << "\n"
            << "e_gamma1 " << analysis.moments.e_gamma1 << "\n"
            << "e2_plus " << analysis.moments.e2_plus << "\n"
            << "e2_minus " << analysis.moments.e2_minus << "\n"
            << "a " << analysis.moments.a << "\n"
            << "b " << analysis.moments.b << "\n";
        if (j.contains("direct")) {
            out << "direct_alpha " << j["direct"]["alpha"].get<double>() << "\n"
                << "direct_e_tau " << j["direct"]["e_tau"].get<double>() << "\n"
                << "discrepancy_alpha " << j["discrepancy"]["alpha"].get<double>() << "\n"
                << "discrepancy_e_tau " << j["discrepancy"]["e_tau"].get<double>() << "\n";
        }
    }
    return analysis.status == GameStatus::PeriodicInfinite ? kExitPeriodic : kExitOk;
}

int cmd_simulate(const GameConfig& config, long long trials, long long max_steps,
                 std::uint64_t seed, const std::string& format) {
    if (trials < 1) {
        std::cerr << "SCHEMA_ERROR: --trials must be >= 1\n";
        return kExitInvalidInput;
    }
    const long long min_horizon = std::max(config.spec.word_u.length(),
                                           config.spec.word_d.length());
    if (max_steps < min_horizon) {
        std::cerr << "SCHEMA_ERROR: --max-steps must be >= the longest word ("
                  << min_horizon << ")\n";
        return kExitInvalidInput;
    }

    ValidationReport report;
    if (const int rc = validate_or_report(config, report)) return rc;

    const SimReport sim = estimate(config.chain, config.spec,
                                   SimConfig{trials, max_steps, seed});

    if (format == "json") {
        json j;
        j["command"] = "simulate";
        j["trials"] = sim.trials;
        j["base_seed"] = sim.base_seed;
        j["wins"] = sim.wins;
        j["losses"] = sim.losses;
        j["censored"] = sim.censored;
        j["alpha_hat"] = sim.alpha_hat;
        j["alpha_se"] = sim.alpha_se;
        j["tau_hat"] = sim.tau_hat;
        j["tau_se"] = sim.tau_se;
        std::cout << j.dump(2) << "\n";
    } else {
        auto& out = text_out();
        out << "trials " << sim.trials << "\n"
            << "base_seed " << sim.base_seed << "\n"
            << "wins " << sim.wins << "\n"
            << "losses " << sim.losses << "\n"
            << "censored " << sim.censored << "\n"
            << "alpha_hat " << sim.alpha_hat << "\n"
            << "alpha_se " << sim.alpha_se << "\n"
            << "tau_hat " << sim.tau_hat << "\n"
            << "tau_se " << sim.tau_se << "\n";
    }
    return kExitOk;
}

int cmd_inspect(const GameConfig& config, const std::string& format) {
    ValidationReport report;
    if (const int rc = validate_or_report(config, report)) return rc;

    const ZChain zc = build_z_chain(config.chain, config.spec.word_u,
                                    config.spec.word_d);
    const RecurrenceReport rec = recurrence_structure(zc);

    if (format == "json") {
        json j;
        j["command"] = "inspect";
        j["states"] = json::array();
        j["state_tokens"] = json::array();
        for (const auto& s : zc.states) {
            j["states"].push_back(joined_state(config.chain.alphabet, s));
            json tokens = json::array();
            for (const int c : s.text) tokens.push_back(config.chain.alphabet.symbols[c]);
            j["state_tokens"].push_back(tokens);
        }
        j["idx_u"] = zc.idx_u;
        j["idx_d"] = zc.idx_d;
        j["pi_z"] = json::array();
        for (int i = 0; i < zc.size(); ++i) j["pi_z"].push_back(zc.pi_z(i));
        j["trans_z"] = json::array();
        for (int i = 0; i < zc.size(); ++i) {
            json row = json::array();
            for (int k = 0; k < zc.size(); ++k) row.push_back(zc.trans_z(i, k));
            j["trans_z"].push_back(row);
        }
        j["recurrence"] = {{"closed_class_count", rec.closed_class_count},
                           {"class_of_u_and_d_shared", rec.class_of_u_and_d_shared}};
        std::cout << j.dump(2) << "\n";
    } else {
        auto& out = text_out();
        out << "states";
        for (const auto& s : zc.states) out << " " << joined_state(config.chain.alphabet, s);
        out << "\nidx_u " << zc.idx_u << "\nidx_d " << zc.idx_d << "\npi_z";
        for (int i = 0; i < zc.size(); ++i) out << " " << zc.pi_z(i);
        out << "\n";
        for (int i = 0; i < zc.size(); ++i) {
            out << "trans_z[" << i << "]";
            for (int k = 0; k < zc.size(); ++k) out << " " << zc.trans_z(i, k);
            out << "\n";
        }
        out << "closed_class_count " << rec.closed_class_count << "\n"
            << "class_of_u_and_d_shared "
            << (rec.class_of_u_and_d_shared ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_check(const GameConfig& config, const std::string& format) {
    ValidationReport report;
    if (const int rc = validate_or_report(config, report)) return rc;

    const ZChain zc = build_z_chain(config.chain, config.spec.word_u,
                                    config.spec.word_d);
    const bool aperiodic = is_aperiodic(zc);
    const bool binary = config.chain.alphabet.size() == 2;

    json j;
    j["command"] = "check";
    j["aperiodic"] = aperiodic;
    if (binary) {
        const bool alternating = classify_binary_alternating(
            2, config.spec.word_u, config.spec.word_d);
        j["binary_alternating_pair"] = alternating;
        j["classifier_agrees"] = (aperiodic == !alternating);
    }

    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "aperiodic " << (aperiodic ? "true" : "false") << "\n";
        if (binary) {
            std::cout << "binary_alternating_pair "
                      << (j["binary_alternating_pair"].get<bool>() ? "true" : "false")
                      << "\n"
                      << "classifier_agrees "
                      << (j["classifier_agrees"].get<bool>() ? "true" : "false")
                      << "\n";
        }
    }
    return aperiodic ? kExitOk : kExitPeriodic;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-word score game analysis over a Markov letter chain"};
    app.require_subcommand(1);

    std::string config_path;
    std::string format = "text";
    bool direct = false;
    long long trials = 100000;
    long long max_steps = 1000000;
    std::uint64_t seed = 1;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "JSON game config")->required();
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_analyze =
        app.add_subcommand("analyze", "Win probability and expected duration");
    add_common(c_analyze);
    c_analyze->add_flag("--direct", direct,
                        "Also run the independent product-chain solve");

    CLI::App* c_simulate = app.add_subcommand("simulate", "Monte Carlo estimate");
    add_common(c_simulate);
    c_simulate->add_option("--trials", trials, "Number of trials");
    c_simulate->add_option("--max-steps", max_steps, "Censoring horizon");
    c_simulate->add_option("--seed", seed, "Base seed");

    CLI::App* c_inspect =
        app.add_subcommand("inspect", "Dump the embedded look-back chain");
    add_common(c_inspect);

    CLI::App* c_check =
        app.add_subcommand("check", "Is the game duration almost surely finite?");
    add_common(c_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidInput;
    }

    try {
        const GameConfig config = parse_config(config_path);
        if (c_analyze->parsed()) return cmd_analyze(config, direct, format);
        if (c_simulate->parsed()) return cmd_simulate(config, trials, max_steps, seed, format);
        if (c_inspect->parsed()) return cmd_inspect(config, format);
        if (c_check->parsed()) return cmd_check(config, format);
        return kExitInternal;
    } catch (const ValidationError& e) {
        std::cerr << report_to_json(e.report()).dump(2) << "\n";
        return kExitInvalidInput;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == "PARSE_ERROR" || e.code() == "SCHEMA_ERROR" ||
            e.code() == "UNKNOWN_SYMBOL") {
            return kExitInvalidInput;
        }
        if (e.code() == "ALL_CENSORED") return kExitAllCensored;
        if (e.code() == "PERIODIC") return kExitPeriodic;
        return kExitNumeric;  // SINGULAR, RESIDUAL_TOO_LARGE, SINGULAR_WALK
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
