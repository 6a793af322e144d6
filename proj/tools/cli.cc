// Copyright 2026 The xxzswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "xxzswap/dynamics_check.h"
#include "xxzswap/errors.h"
#include "xxzswap/noise_fidelity.h"
#include "xxzswap/pseudospin_mapper.h"
#include "xxzswap/swap_design.h"
#include "xxzswap/table.h"

namespace xxzswap::cli {

namespace {

struct OutputOptions {
    std::string format = "csv";
    std::string path;
};

void add_output_options(CLI::App *cmd, OutputOptions &opts) {
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", opts.path, "Write the table to this file instead of stdout");
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Table &table, const OutputOptions &opts, std::ostream &out) {
    OutputFormat format = parse_output_format(opts.format);
    if (opts.path.empty()) {
        write_table(table, format, out);
        return;
    }
    std::ofstream file(opts.path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open output path '" + opts.path + "' for writing");
    }
    write_table(table, format, file);
    file.flush();
    if (!file) {
        throw IoError("failed while writing '" + opts.path + "'");
    }
}

uint64_t resolve_seed(const std::optional<uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv(SEED_ENV_VAR)) {
        std::string text(env);
        size_t used = 0;
        uint64_t v = 0;
        try {
            v = std::stoull(text, &used, 10);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != text.size()) {
            throw ValidationError(std::string(SEED_ENV_VAR) + " must be an unsigned integer, got '" + text + "'");
        }
        return v;
    }
    return DEFAULT_SEED;
}

std::vector<double> linear_axis(double max, size_t points) {
    if (points == 0) {
        throw ValidationError("an axis needs at least one point");
    }
    if (!(max >= 0)) {
        throw ValidationError("axis maximum must be nonnegative");
    }
    std::vector<double> axis(points);
    for (size_t k = 0; k < points; k++) {
        axis[k] = points == 1 ? 0.0 : max * static_cast<double>(k) / static_cast<double>(points - 1);
    }
    return axis;
}

// ---- pseudospin config ----

double require_number(const nlohmann::json &obj, const std::string &section, const std::string &key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(section + "." + key + ": missing required field");
    }
    if (!it->is_number()) {
        throw ValidationError(section + "." + key + ": expected a number, got " + std::string(it->type_name()));
    }
    return it->get<double>();
}

void reject_unknown(const nlohmann::json &obj, const std::string &section, const std::vector<std::string> &known) {
    for (const auto &[key, value] : obj.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ValidationError(section + "." + key + ": unknown field");
        }
    }
}

const nlohmann::json &require_object(const nlohmann::json &root, const std::string &key) {
    auto it = root.find(key);
    if (it == root.end()) {
        throw ValidationError(key + ": missing required section");
    }
    if (!it->is_object()) {
        throw ValidationError(key + ": expected an object, got " + std::string(it->type_name()));
    }
    return *it;
}

DotSpec parse_dot(const nlohmann::json &root, const std::string &key) {
    const auto &obj = require_object(root, key);
    reject_unknown(obj, key, {"hbar_omega0", "zeeman_z", "gradient_coupling", "g_times_b"});
    return DotSpec{require_number(obj, key, "hbar_omega0"), require_number(obj, key, "zeeman_z"),
                   require_number(obj, key, "gradient_coupling"), require_number(obj, key, "g_times_b")};
}

CouplingSpec parse_coupling(const nlohmann::json &root) {
    const auto &obj = require_object(root, "coupling");
    reject_unknown(obj, "coupling", {"U", "V", "t00", "t11", "t12"});
    return CouplingSpec{require_number(obj, "coupling", "U"), require_number(obj, "coupling", "V"),
                        require_number(obj, "coupling", "t00"), require_number(obj, "coupling", "t11"),
                        require_number(obj, "coupling", "t12")};
}

// ---- commands ----

int cmd_swap_solve(int64_t m, int64_t n, double tau, double tolerance, const OutputOptions &opts, std::ostream &out,
                   std::ostream &err) {
    SwapPlan plan = solve_schedule(m, n, tau);
    VerificationReport report = verify_swap(plan, tolerance);
    Table t;
    t.columns = {"m",     "n",    "tau",  "J",  "Delta", "Gamma", "kind", "abs_delta_ge_1", "trace_overlap",
                 "max_entry_deviation", "global_phase", "min_state_fidelity", "passed"};
    t.add_row({plan.m, plan.n, plan.tau, plan.params.exchange, plan.params.anisotropy, plan.params.zeeman,
               std::string(kind_name(plan.kind)), plan.anisotropy_at_least_one(), report.trace_overlap,
               report.max_entry_deviation, report.global_phase, report.min_state_fidelity, report.passed});
    emit(t, opts, out);
    if (!report.passed) {
        err << "verification failed: trace overlap " << format_number(report.trace_overlap)
            << ", min state fidelity " << format_number(report.min_state_fidelity) << "\n";
        return EXIT_VERIFICATION_FAILED;
    }
    return EXIT_OK;
}

int cmd_feasibility_scan(int64_t m_min, int64_t m_max, int64_t n_min, int64_t n_max, double tau, double tolerance,
                         const OutputOptions &opts, std::ostream &out) {
    auto rows = delta_feasibility_scan(m_min, m_max, n_min, n_max, tau, tolerance);
    Table t;
    t.columns = {"m", "n", "Delta", "kind", "trace_overlap", "global_phase", "abs_delta_ge_1", "passed"};
    for (const auto &r : rows) {
        t.add_row({r.m, r.n, r.anisotropy, std::string(kind_name(r.kind)), r.trace_overlap, r.global_phase,
                   std::abs(r.anisotropy) >= 1, r.passed});
    }
    emit(t, opts, out);
    return EXIT_OK;
}

int cmd_fidelity_sweep(double xz_max, size_t xz_points, double h_max, size_t h_points, size_t samples,
                       uint64_t seed, int64_t mean_m, int64_t mean_n, unsigned workers, const OutputOptions &opts,
                       std::ostream &out) {
    SwapPlan mean_plan = solve_schedule(mean_m, mean_n, 1.0);
    if (mean_plan.kind != SwapKind::Swap) {
        throw ValidationError("--mean-m/--mean-n must have an odd difference (a swap point)");
    }
    auto rows = fidelity_grid(linear_axis(xz_max, xz_points), linear_axis(h_max, h_points), samples, seed,
                              mean_plan.target_phases(), workers);
    Table t;
    t.columns = {"lambda_x", "lambda_z", "lambda_h", "f_analytic", "f_mc", "f_mc_stderr", "samples", "seed"};
    for (const auto &r : rows) {
        t.add_row({r.lambda_x, r.lambda_z, r.lambda_h, r.f_analytic, r.f_mc, r.f_mc_stderr,
                   static_cast<int64_t>(r.samples), static_cast<int64_t>(r.seed)});
    }
    emit(t, opts, out);
    return EXIT_OK;
}

int cmd_ensemble_fidelity(const PhaseTriple &phases, const std::string &measure_text, size_t samples, uint64_t seed,
                          unsigned workers, const OutputOptions &opts, std::ostream &out) {
    std::vector<StateMeasure> measures;
    if (measure_text == "both") {
        measures = {StateMeasure::HaarProduct, StateMeasure::UniformAngles};
    } else {
        measures = {parse_state_measure(measure_text)};
    }
    double closed_form = gate_fidelity(phases);
    Table t;
    t.columns = {"measure",  "phi_x",         "phi_z",      "phi_h",       "f_ensemble", "f_ensemble_stderr",
                 "f_closed", "discrepancy",   "samples",    "seed"};
    for (auto measure : measures) {
        auto est = state_ensemble_fidelity(phases, measure, samples, seed, workers);
        t.add_row({std::string(measure_name(measure)), phases.x, phases.z, phases.h, est.mean, est.std_error,
                   closed_form, est.mean - closed_form, static_cast<int64_t>(samples), static_cast<int64_t>(seed)});
    }
    emit(t, opts, out);
    return EXIT_OK;
}

int cmd_pseudospin_map(const std::string &config_path, std::optional<int64_t> m, std::optional<int64_t> n,
                       double tolerance, const OutputOptions &opts, std::ostream &out, std::ostream &err) {
    if (m.has_value() != n.has_value()) {
        throw ValidationError("--m and --n must be given together");
    }
    std::ifstream in(config_path);
    if (!in) {
        throw ValidationError("cannot read config file '" + config_path + "'");
    }
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ValidationError("config: expected a JSON object at top level");
    }
    reject_unknown(root, "config", {"dot_i", "dot_j", "coupling"});
    DotSpec dot_i = parse_dot(root, "dot_i");
    DotSpec dot_j = parse_dot(root, "dot_j");
    CouplingSpec coupling = parse_coupling(root);

    EffectiveParams eff = effective_params(dot_i, dot_j, coupling);
    for (const auto &w : eff.warnings) {
        err << "warning: " << w << "\n";
    }

    Table t;
    t.columns = {"J_eff",   "Delta_tilde", "omega_tilde", "t_plus",  "t_minus",
                 "f_plus",  "f_minus",     "f",           "omega_i", "omega_j",
                 "omega",   "inhomogeneity_ratio",        "t_plus_ratio", "t_minus_ratio"};
    std::vector<Cell> row = {eff.J_eff,   eff.Delta_tilde, eff.omega_tilde, eff.t_plus,  eff.t_minus,
                             eff.f_plus,  eff.f_minus,     eff.f,           eff.omega_i, eff.omega_j,
                             eff.omega,   eff.inhomogeneity_ratio,          eff.t_plus_ratio, eff.t_minus_ratio};
    if (m) {
        SwapMapping mapping = map_to_swap(eff, *m, *n, tolerance);
        for (const auto &f : mapping.failures) {
            err << "infeasible: " << f << "\n";
        }
        for (const char *c :
             {"m", "n", "feasible", "required_delta", "delta_residual", "tau", "zeeman_phase_residual"}) {
            t.columns.emplace_back(c);
        }
        row.insert(row.end(), {mapping.m, mapping.n, mapping.feasible, mapping.required_delta,
                               mapping.delta_residual, mapping.tau, mapping.zeeman_phase_residual});
    }
    t.add_row(std::move(row));
    emit(t, opts, out);
    return EXIT_OK;
}

int cmd_verify_dynamics(const DynamicsCheckConfig &config, const OutputOptions &opts, std::ostream &out,
                        std::ostream &err) {
    DynamicsCheckResult r = run_dynamics_check(config);
    Table t;
    t.columns = {"check", "cases", "max_deviation", "threshold", "passed"};
    t.add_row({std::string("propagator_vs_dense_exponential"), static_cast<int64_t>(config.propagator_cases),
               r.max_propagator_deviation, config.propagator_threshold,
               r.max_propagator_deviation < config.propagator_threshold});
    t.add_row({std::string("determinant_closed_form_vs_partial_trace"), static_cast<int64_t>(config.determinant_cases),
               r.max_determinant_deviation, config.determinant_threshold,
               r.max_determinant_deviation < config.determinant_threshold});
    emit(t, opts, out);
    if (!r.passed) {
        err << "dynamics check failed\n";
        return EXIT_VERIFICATION_FAILED;
    }
    return EXIT_OK;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Design and verify exact SWAP gates in the two-qubit XXZ model", "xxzswap"};
    app.require_subcommand(1, 1);

    std::function<int()> action;
    OutputOptions opts;
    std::optional<uint64_t> seed_flag;
    auto add_seed = [&](CLI::App *cmd) {
        cmd->add_option("--seed", seed_flag,
                        "Random seed (default " + std::to_string(DEFAULT_SEED) + ", or $" + SEED_ENV_VAR + ")");
    };

    // swap-solve
    int64_t m = 0, n = 0;
    double tau = 1.0;
    double tolerance = 1e-10;
    auto *solve = app.add_subcommand("swap-solve", "Solve the constant-parameter schedule for (m, n) and verify it");
    solve->add_option("--m", m, "Lattice index m")->required();
    solve->add_option("--n", n, "Lattice index n")->required();
    solve->add_option("--tau", tau, "Gate duration")->capture_default_str();
    solve->add_option("--tolerance", tolerance, "Verification tolerance")->capture_default_str();
    add_output_options(solve, opts);
    solve->callback([&] { action = [&] { return cmd_swap_solve(m, n, tau, tolerance, opts, out, err); }; });

    // feasibility-scan
    int64_t m_min = -3, m_max = 3, n_min = -3, n_max = 3;
    auto *scan = app.add_subcommand("feasibility-scan", "Solve and verify every (m, n) pair in a range");
    scan->add_option("--m-min", m_min)->capture_default_str();
    scan->add_option("--m-max", m_max)->capture_default_str();
    scan->add_option("--n-min", n_min)->capture_default_str();
    scan->add_option("--n-max", n_max)->capture_default_str();
    scan->add_option("--tau", tau, "Gate duration")->capture_default_str();
    scan->add_option("--tolerance", tolerance, "Verification tolerance")->capture_default_str();
    add_output_options(scan, opts);
    scan->callback([&] {
        action = [&] { return cmd_feasibility_scan(m_min, m_max, n_min, n_max, tau, tolerance, opts, out); };
    });

    // fidelity-sweep
    double xz_max = 4.0, h_max = 4.0;
    size_t xz_points = 9, h_points = 9;
    size_t samples = DEFAULT_SAMPLES;
    int64_t mean_m = 2, mean_n = 1;
    unsigned workers = 1;
    auto *sweep = app.add_subcommand("fidelity-sweep", "Average gate fidelity over a lambda_x = lambda_z by lambda_h grid");
    sweep->add_option("--xz-max", xz_max, "Largest lambda_x = lambda_z")->capture_default_str();
    sweep->add_option("--xz-points", xz_points, "Grid points along lambda_x = lambda_z")->capture_default_str();
    sweep->add_option("--h-max", h_max, "Largest lambda_h")->capture_default_str();
    sweep->add_option("--h-points", h_points, "Grid points along lambda_h")->capture_default_str();
    sweep->add_option("--samples", samples, "Monte Carlo samples per grid point")->capture_default_str();
    sweep->add_option("--mean-m", mean_m, "Swap point used as the mean phases")->capture_default_str();
    sweep->add_option("--mean-n", mean_n, "Swap point used as the mean phases")->capture_default_str();
    sweep->add_option("--workers", workers, "Sampling threads (results do not depend on this)")
        ->capture_default_str();
    add_seed(sweep);
    add_output_options(sweep, opts);
    sweep->callback([&] {
        action = [&] {
            return cmd_fidelity_sweep(xz_max, xz_points, h_max, h_points, samples, resolve_seed(seed_flag), mean_m,
                                      mean_n, workers, opts, out);
        };
    });

    // ensemble-fidelity
    PhaseTriple phases = default_swap_phases();
    std::string measure = "both";
    auto *ensemble = app.add_subcommand(
        "ensemble-fidelity", "Average |<psi|SWAP^dagger U|psi>|^2 over random product states next to the closed form");
    ensemble->add_option("--phi-x", phases.x)->capture_default_str();
    ensemble->add_option("--phi-z", phases.z)->capture_default_str();
    ensemble->add_option("--phi-h", phases.h)->capture_default_str();
    ensemble->add_option("--measure", measure, "HaarProduct, UniformAngles or both")->capture_default_str();
    ensemble->add_option("--samples", samples, "Number of sampled states")->capture_default_str();
    ensemble->add_option("--workers", workers)->capture_default_str();
    add_seed(ensemble);
    add_output_options(ensemble, opts);
    ensemble->callback([&] {
        action = [&] {
            return cmd_ensemble_fidelity(phases, measure, samples, resolve_seed(seed_flag), workers, opts, out);
        };
    });

    // pseudospin-map
    std::string config_path;
    std::optional<int64_t> map_m, map_n;
    double map_tolerance = DEFAULT_MAPPING_TOLERANCE;
    auto *map = app.add_subcommand("pseudospin-map", "Map a two-dot device description to effective XXZ parameters");
    map->add_option("--config", config_path, "Device JSON with dot_i, dot_j and coupling sections")->required();
    map->add_option("--m", map_m, "Check feasibility of the (m, n) swap");
    map->add_option("--n", map_n, "Check feasibility of the (m, n) swap");
    map->add_option("--tolerance", map_tolerance, "Feasibility tolerance")->capture_default_str();
    add_output_options(map, opts);
    map->callback([&] {
        action = [&] { return cmd_pseudospin_map(config_path, map_m, map_n, map_tolerance, opts, out, err); };
    });

    // verify-dynamics
    DynamicsCheckConfig check;
    auto *verify = app.add_subcommand("verify-dynamics", "Randomized closed-form vs oracle equivalence runs");
    verify->add_option("--cases", check.propagator_cases, "Propagator cases")->capture_default_str();
    verify->add_option("--determinant-cases", check.determinant_cases, "Determinant cases")->capture_default_str();
    verify->add_flag("--inject-fault", check.inject_fault)->group("");
    add_seed(verify);
    add_output_options(verify, opts);
    verify->callback([&] {
        action = [&] {
            check.seed = resolve_seed(seed_flag);
            return cmd_verify_dynamics(check, opts, out, err);
        };
    });

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("xxzswap");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_storage) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? EXIT_OK : EXIT_USAGE;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    try {
        return action();
    } catch (const SingularityError &e) {
        err << "singularity: " << e.what() << "\n";
        return EXIT_SINGULARITY;
    } catch (const ValidationError &e) {
        err << "invalid input: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const ContractError &e) {
        err << "contract violation: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}

}  // namespace xxzswap::cli
