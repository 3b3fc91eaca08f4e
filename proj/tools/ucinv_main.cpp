// Command-line front end: generalized matrix inversion on CSV matrices,
// resolved-rate simulation scenarios, and verification suites.

#include "ucinv/generalized_inverse.hpp"
#include "ucinv/matrix_io.hpp"
#include "ucinv/reports.hpp"
#include "ucinv/scenarios.hpp"
#include "ucinv/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("UCINV_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("UCINV_SEED", "not a valid seed value");
        }
    }
    return ucinv::kDefaultVerifySeed;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

int run_invert(const std::string& input, const std::string& kind_name, int split,
               bool split_given, std::optional<double> tolerance, const std::string& output) {
    if (kind_name == "mixed" && !split_given) {
        throw std::invalid_argument("--kind mixed needs --split (leading unit-variable count)");
    }
    const ucinv::Matrix a = ucinv::read_matrix_csv_file(input);
    ucinv::Matrix result;
    if (kind_name == "mp") {
        result = ucinv::pinv(a, tolerance);
    } else {
        const ucinv::InverseKind kind = ucinv::InverseKind::parse(kind_name, split);
        result = ucinv::apply_inverse(kind, a);
    }
    if (output.empty()) {
        ucinv::write_matrix_csv(std::cout, result);
    } else {
        ucinv::write_matrix_csv_file(output, result);
    }
    return kExitPass;
}

int run_simulate(const ucinv::ScenarioSpec& spec, const std::string& name,
                 const std::string& out_csv, const std::string& out_summary) {
    const ucinv::ScenarioOutcome outcome = ucinv::run_scenario(spec);
    ucinv::write_trajectory_csv_file(out_csv, outcome.result);
    const std::string summary = ucinv::summary_json(outcome, name).dump(2) + "\n";
    if (out_summary.empty() || out_summary == "-") {
        std::cout << summary;
    } else {
        write_text_file(out_summary, summary);
    }
    return outcome.passed ? kExitPass : kExitFail;
}

int run_verify_cmd(const std::string& suite, std::uint64_t seed, int trials,
                   const std::string& out_json) {
    const std::vector<ucinv::VerifyReport> reports = ucinv::run_verify(suite, seed, trials);
    ucinv::Json all = ucinv::Json::array();
    bool passed = true;
    for (const ucinv::VerifyReport& r : reports) {
        all.push_back(ucinv::to_json(r));
        passed = passed && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << "\n";
        for (const ucinv::VerifyCheck& c : r.checks) {
            if (!c.passed) {
                std::cout << "  FAIL " << c.label << " (measured " << c.worst << ", bound "
                          << c.tolerance << ")\n";
            }
        }
    }
    if (!out_json.empty()) write_text_file(out_json, all.dump(2) + "\n");
    return passed ? kExitPass : kExitFail;
}

std::string registry_listing() {
    std::string listing = "known scenarios:\n";
    for (const ucinv::ScenarioSpec& s : ucinv::scenario_registry()) {
        listing += "  " + s.name + "  (" + s.description + ")\n";
    }
    return listing;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized matrix inverses (Moore-Penrose, unit-consistent, mixed) "
                 "with a resolved-rate robot simulation harness"};
    app.set_config("--config", "", "key=value file; subcommand options use dotted keys, e.g. simulate.units=cm");
    app.require_subcommand(1);

    // invert
    auto* invert = app.add_subcommand("invert", "invert a CSV matrix file");
    std::string invert_input, invert_output;
    std::string invert_kind = "mp";
    int invert_split = 0;
    double invert_tolerance = -1.0;
    invert->add_option("input", invert_input, "input matrix (CSV)")->required();
    invert->add_option("--kind", invert_kind, "inverse kind")
        ->check(CLI::IsMember({"mp", "uc", "mixed"}));
    invert->add_option("--split", invert_split,
                       "leading unit-variable count for the mixed inverse");
    invert->add_option("--tolerance", invert_tolerance,
                       "singular value cutoff for mp (default: automatic)");
    invert->add_option("--out", invert_output, "output file (default: stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "run a resolved-rate scenario");
    std::string scen_name, sim_model = "arm", sim_inverse, sim_units, sim_out = "trajectory.csv";
    std::string sim_summary;
    double sim_rotation_deg = 0.0, sim_dt = 1e-3, sim_duration = 0.1;
    simulate->add_option("scenario", scen_name, "scenario name from the built-in registry");
    simulate->add_option("--model", sim_model, "arm or rover")
        ->check(CLI::IsMember({"arm", "rover"}));
    simulate->add_option("--inverse", sim_inverse, "mp, uc, or mixed")
        ->check(CLI::IsMember({"mp", "uc", "mixed"}));
    simulate->add_option("--units", sim_units, "m or cm")->check(CLI::IsMember({"m", "cm"}));
    simulate->add_option("--rotation-deg", sim_rotation_deg, "rover frame rotation (degrees)");
    simulate->add_option("--dt", sim_dt, "timestep (seconds)");
    simulate->add_option("--duration", sim_duration, "total simulated time (seconds)");
    simulate->add_option("--out", sim_out, "trajectory CSV path");
    simulate->add_option("--summary", sim_summary, "summary JSON path (default: stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite, verify_json;
    std::uint64_t verify_seed = 0;
    bool seed_given = false;
    int verify_trials = ucinv::kDefaultVerifyTrials;
    verify->add_option("suite", verify_suite, "table1|table2|penrose|uc-consistency|mp-rotation|kron|all")
        ->required();
    verify->add_option("--seed", verify_seed, "random seed")->each([&](const std::string&) {
        seed_given = true;
    });
    verify->add_option("--trials", verify_trials, "random trials per property");
    verify->add_option("--json", verify_json, "write the report JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help or error text
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (invert->parsed()) {
            std::optional<double> tol;
            if (invert_tolerance >= 0.0) tol = invert_tolerance;
            return run_invert(invert_input, invert_kind, invert_split,
                              invert->count("--split") > 0, tol, invert_output);
        }
        if (simulate->parsed()) {
            if (!scen_name.empty()) {
                const ucinv::ScenarioSpec* spec = ucinv::find_scenario(scen_name);
                if (!spec) {
                    std::cerr << "unknown scenario: " << scen_name << "\n" << registry_listing();
                    return kExitUsage;
                }
                return run_simulate(*spec, scen_name, sim_out, sim_summary);
            }
            if (sim_inverse.empty() || sim_units.empty()) {
                std::cerr << "either give a scenario name or --inverse and --units\n"
                          << registry_listing();
                return kExitUsage;
            }
            ucinv::ScenarioSpec spec;
            spec.name = "custom";
            const double scale = sim_units == "cm" ? 100.0 : 1.0;
            ucinv::SimulationConfig cfg;
            if (sim_model == "arm") {
                cfg.model = ucinv::ModelKind::Arm;
                cfg.arm.q = Eigen::Vector3d(30.0 * std::numbers::pi / 180.0,
                                            30.0 * std::numbers::pi / 180.0, 0.7);
                cfg.target_velocity = Eigen::Vector3d(2.0, -2.0, 0.0);
            } else {
                cfg.model = ucinv::ModelKind::Rover;
                cfg.rover.q << 45.0 * std::numbers::pi / 180.0, 1.1, 0.0, 0.0, 0.0;
                cfg.target_velocity = ucinv::Vector(5);
                cfg.target_velocity << 2.0, 0.0, -1.0, 0.0, 0.0;
            }
            cfg.inverse = ucinv::InverseKind::parse(sim_inverse, 2);
            cfg.unit_scale = scale;
            cfg.frame_rotation = sim_rotation_deg * std::numbers::pi / 180.0;
            cfg.dt = sim_dt;
            cfg.duration = sim_duration;
            spec.config = cfg;
            return run_simulate(spec, spec.name, sim_out, sim_summary);
        }
        if (verify->parsed()) {
            const std::uint64_t seed = seed_given ? verify_seed : default_seed();
            return run_verify_cmd(verify_suite, seed, verify_trials, verify_json);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
