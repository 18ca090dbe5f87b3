#include "wallcross/error.hpp"
#include "wallcross/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using wallcross::Json;

// 0 success, 1 checked failure, 2 usage or parse error.
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void emit(const Json& report, const std::string& output_path) {
    const std::string text = report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw wallcross::Error(wallcross::ErrorKind::usage,
                               "cannot write " + output_path);
    }
    out << text;
}

int exit_code_for(const wallcross::Error& e) {
    switch (e.kind()) {
        case wallcross::ErrorKind::usage:
        case wallcross::ErrorKind::invalid_input:
            return kExitUsage;
        default:
            return kExitFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chamber structures, fibred-knot invariants and wall-crossing "
                 "relations for unitary representation spaces"};
    app.require_subcommand(1);

    int n = 2, k = 1, genus = 1, trials = 50;
    std::uint64_t seed_base = 42;
    std::string knot_path, fiber_dims_path, base_values_path, output_path;
    bool allow_qhs = false;
    double tol_residual = 1e-10, rank_tol = 1e-6, fd_step = 1e-5, angle_tol = 1e-8;

    CLI::App* chambers = app.add_subcommand(
        "chambers", "Enumerate the hyperplane arrangement and chambers of one sector");
    chambers->add_option("--n", n, "rank")->required();
    chambers->add_option("--k", k, "sector index")->required();
    chambers->add_option("--genus", genus, "genus for codimension bookkeeping");
    chambers->add_option("--output", output_path, "write the report here");

    CLI::App* knot = app.add_subcommand(
        "knot", "Validate a knot file and compute its monodromy polynomials");
    knot->add_option("--input", knot_path, "knot JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    knot->add_flag("--allow-qhs", allow_qhs,
                   "accept det(I - M) != 0 instead of +-1");
    knot->add_option("--output", output_path, "write the report here");

    CLI::App* invariants = app.add_subcommand(
        "invariants", "Propagate the Lefschetz invariants across the chamber graph");
    invariants->add_option("--n", n, "rank")->required();
    invariants->add_option("--k", k, "sector index")->required();
    invariants->add_option("--genus", genus, "genus")->required();
    invariants->add_option("--knot", knot_path, "knot JSON file")
        ->required()
        ->check(CLI::ExistingFile);
    invariants->add_option("--fiber-dims", fiber_dims_path, "wall (a,b) JSON file")
        ->check(CLI::ExistingFile);
    invariants->add_option("--base", base_values_path, "base symbol values JSON file")
        ->check(CLI::ExistingFile);
    invariants->add_option("--output", output_path, "write the report here");

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the seeded floating-point battery for the commutator map");
    verify->add_option("--n", n, "rank")->required();
    verify->add_option("--genus", genus, "genus")->required();
    verify->add_option("--trials", trials, "number of seeds")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed-base", seed_base, "first seed");
    verify->add_option("--tol", tol_residual, "residual tolerance");
    verify->add_option("--rank-tol", rank_tol, "relative singular value cutoff");
    verify->add_option("--fd-step", fd_step, "finite difference step");
    verify->add_option("--angle-tol", angle_tol, "wall membership tolerance");
    verify->add_option("--output", output_path, "write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (chambers->parsed()) {
            emit(wallcross::chambers_report(n, k, genus), output_path);
            return 0;
        }
        if (knot->parsed()) {
            const wallcross::FibredKnot loaded = wallcross::load_knot(knot_path);
            const Json report = wallcross::knot_report(loaded, allow_qhs);
            emit(report, output_path);
            return report.at("valid").get<bool>() ? 0 : kExitFailure;
        }
        if (invariants->parsed()) {
            const wallcross::FibredKnot loaded = wallcross::load_knot(knot_path);
            wallcross::FiberDimMap fiber_dims;
            if (!fiber_dims_path.empty()) {
                fiber_dims = wallcross::load_fiber_dims(fiber_dims_path);
            }
            std::map<std::string, std::int64_t> base_values;
            if (!base_values_path.empty()) {
                base_values = wallcross::load_base_values(base_values_path);
            }
            const wallcross::KnotValidation validation = wallcross::validate(loaded);
            if (!validation.ok(allow_qhs)) {
                std::cerr << "invalid knot:";
                for (const auto& f : validation.failures) std::cerr << " " << f << ";";
                std::cerr << "\n";
                return kExitFailure;
            }
            emit(wallcross::invariants_report(n, k, genus, loaded, fiber_dims,
                                              base_values),
                 output_path);
            return 0;
        }
        if (verify->parsed()) {
            wallcross::BatteryConfig config;
            config.n = n;
            config.g = genus;
            config.trials = trials;
            config.seed_base = seed_base;
            config.tol_residual = tol_residual;
            config.rank_tol = rank_tol;
            config.fd_step = fd_step;
            config.angle_tol = angle_tol;
            const wallcross::BatteryReport battery = wallcross::run_battery(config);
            emit(wallcross::verify_report(battery), output_path);
            return battery.pass ? 0 : kExitFailure;
        }
    } catch (const wallcross::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
