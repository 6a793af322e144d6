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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "xxzswap/noise_fidelity.h"
#include "xxzswap/pseudospin_mapper.h"
#include "xxzswap/table.h"

using namespace xxzswap;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

class TempDir {
   public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("xxzswap_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                 ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() {
        fs::remove_all(path_);
    }
    std::string file(const std::string &name) const {
        return (path_ / name).string();
    }
    std::string write(const std::string &name, const std::string &content) const {
        std::ofstream f(file(name));
        f << content;
        return file(name);
    }

   private:
    fs::path path_;
};

std::string slurp(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string device_json(double gradient, double zeeman = 0.2, double U = 0.5, double V = 0) {
    nlohmann::ordered_json dot = {
        {"hbar_omega0", 1.0}, {"zeeman_z", zeeman}, {"gradient_coupling", gradient}, {"g_times_b", 1.0}};
    nlohmann::ordered_json root = {
        {"dot_i", dot},
        {"dot_j", dot},
        {"coupling", {{"U", U}, {"V", V}, {"t00", 0.05}, {"t11", 0.05}, {"t12", 0.02}}},
    };
    return root.dump();
}

}  // namespace

TEST(cli, swap_solve_examples) {
    auto rows = run_json({"swap-solve", "--m", "2", "--n", "1", "--tau", "1"});
    ASSERT_EQ(rows.size(), 1u);
    ASSERT_EQ(rows[0]["Delta"].get<double>(), 3);
    ASSERT_EQ(rows[0]["kind"], "Swap");
    ASSERT_EQ(rows[0]["trace_overlap"].get<double>(), 1);
    ASSERT_EQ(rows[0]["passed"], true);
    ASSERT_NEAR(rows[0]["global_phase"].get<double>(), M_PI / 4, 1e-11);

    auto even = run_json({"swap-solve", "--m", "3", "--n", "1", "--tau", "1"});
    ASSERT_EQ(even[0]["kind"], "ReturnToSelf");

    auto same = run_cli({"swap-solve", "--m", "1", "--n", "1", "--tau", "1"});
    ASSERT_EQ(same.code, cli::EXIT_USAGE);
    ASSERT_FALSE(same.err.empty());

    ASSERT_EQ(run_cli({"swap-solve", "--m", "2", "--n", "1", "--tau", "-1"}).code, cli::EXIT_USAGE);
    ASSERT_EQ(run_cli({"swap-solve", "--m", "two", "--n", "1"}).code, cli::EXIT_USAGE);
    ASSERT_EQ(run_cli({"swap-solve", "--n", "1"}).code, cli::EXIT_USAGE);
}

TEST(cli, swap_solve_reports_verification_failure) {
    // A tolerance below round-off cannot be met.
    auto r = run_cli({"swap-solve", "--m", "5", "--n", "-4", "--tau", "0.37", "--tolerance", "0"});
    ASSERT_EQ(r.code, cli::EXIT_VERIFICATION_FAILED) << r.out;
}

TEST(cli, usage_and_help) {
    ASSERT_EQ(run_cli({}).code, cli::EXIT_USAGE);
    ASSERT_EQ(run_cli({"no-such-command"}).code, cli::EXIT_USAGE);
    auto help = run_cli({"--help"});
    ASSERT_EQ(help.code, cli::EXIT_OK);
    ASSERT_NE(help.out.find("fidelity-sweep"), std::string::npos);
    ASSERT_EQ(help.out.find("inject-fault"), std::string::npos);
    ASSERT_EQ(run_cli({"swap-solve", "--m", "2", "--n", "1", "--format", "xml"}).code, cli::EXIT_USAGE);
}

TEST(cli, feasibility_scan_rows) {
    auto rows = run_json({"feasibility-scan"});
    ASSERT_EQ(rows.size(), 42u);
    bool saw_third = false;
    for (const auto &r : rows) {
        if (r["m"] == 2 && r["n"] == -1) {
            saw_third = true;
            ASSERT_NEAR(r["Delta"].get<double>(), 1.0 / 3, 1e-12);
            ASSERT_EQ(r["abs_delta_ge_1"], false);
        }
    }
    ASSERT_TRUE(saw_third);
}

TEST(cli, fidelity_sweep_small_grid) {
    auto rows = run_json({"fidelity-sweep", "--xz-points", "3", "--h-points", "3", "--samples", "20000"});
    ASSERT_EQ(rows.size(), 9u);
    ASSERT_EQ(rows[0]["f_analytic"].get<double>(), 1.0);
    ASSERT_EQ(rows[0]["seed"].get<uint64_t>(), cli::DEFAULT_SEED);
    for (const auto &r : rows) {
        double diff = std::abs(r["f_mc"].get<double>() - r["f_analytic"].get<double>());
        ASSERT_LE(diff, 3 * r["f_mc_stderr"].get<double>() + 1e-12);
    }
    // The far corner (lambda = 4 on both axes) sits at the 7/15 plateau.
    ASSERT_NEAR(rows[8]["f_analytic"].get<double>(), 7.0 / 15, 1e-3);
    ASSERT_EQ(rows[8]["lambda_x"].get<double>(), 4);
    ASSERT_EQ(rows[8]["lambda_h"].get<double>(), 4);
}

TEST(cli, identical_invocations_write_identical_files) {
    TempDir dir;
    for (const char *format : {"csv", "json"}) {
        std::vector<std::string> base = {"fidelity-sweep", "--xz-points", "3", "--h-points", "2", "--samples",
                                         "5000",           "--seed",      "77", "--format",   format};
        auto a = base;
        a.insert(a.end(), {"--output", dir.file("a")});
        auto b = base;
        b.insert(b.end(), {"--output", dir.file("b"), "--workers", "3"});
        ASSERT_EQ(run_cli(a).code, 0);
        ASSERT_EQ(run_cli(b).code, 0);
        ASSERT_FALSE(slurp(dir.file("a")).empty());
        ASSERT_EQ(slurp(dir.file("a")), slurp(dir.file("b")));
    }
}

TEST(cli, seed_environment_override) {
    ::setenv(cli::SEED_ENV_VAR, "4242", 1);
    auto rows = run_json({"fidelity-sweep", "--xz-points", "1", "--h-points", "1", "--samples", "10"});
    auto flagged = run_json({"fidelity-sweep", "--xz-points", "1", "--h-points", "1", "--samples", "10", "--seed", "9"});
    ::setenv(cli::SEED_ENV_VAR, "not-a-number", 1);
    auto bad = run_cli({"fidelity-sweep", "--xz-points", "1", "--h-points", "1", "--samples", "10"});
    ::unsetenv(cli::SEED_ENV_VAR);
    ASSERT_EQ(rows[0]["seed"].get<uint64_t>(), 4242u);
    ASSERT_EQ(flagged[0]["seed"].get<uint64_t>(), 9u);
    ASSERT_EQ(bad.code, cli::EXIT_USAGE);
}

TEST(cli, unwritable_output) {
    auto r = run_cli({"feasibility-scan", "--output", "/nonexistent-dir/x/y.csv"});
    ASSERT_EQ(r.code, cli::EXIT_USAGE);
    ASSERT_NE(r.err.find("/nonexistent-dir/x/y.csv"), std::string::npos);
}

TEST(cli, ensemble_fidelity_rows) {
    auto rows = run_json({"ensemble-fidelity", "--phi-x", "0", "--phi-z", "0", "--phi-h", "0", "--samples", "200000"});
    ASSERT_EQ(rows.size(), 2u);
    ASSERT_EQ(rows[0]["measure"], "HaarProduct");
    ASSERT_NEAR(rows[0]["f_closed"].get<double>(), 0.2, 1e-12);
    ASSERT_NEAR(rows[0]["f_ensemble"].get<double>(), 1.0 / 3, 5 * rows[0]["f_ensemble_stderr"].get<double>());
    ASSERT_EQ(run_cli({"ensemble-fidelity", "--measure", "nope"}).code, cli::EXIT_USAGE);
}

TEST(cli, pseudospin_worked_example_matches_library) {
    TempDir dir;
    auto path = dir.write("device.json", device_json(0.1));
    auto r = run_cli({"pseudospin-map", "--config", path});
    ASSERT_EQ(r.code, 0) << r.err;

    DotSpec dot{1.0, 0.2, 0.1, 1.0};
    auto eff = effective_params(dot, dot, CouplingSpec{0.5, 0, 0.05, 0.05, 0.02});
    std::istringstream lines(r.out);
    std::string header, values;
    std::getline(lines, header);
    std::getline(lines, values);
    ASSERT_EQ(header.rfind("J_eff,Delta_tilde,omega_tilde,t_plus,t_minus,f_plus,f_minus,f,", 0), 0u);
    std::string expected = format_number(eff.J_eff) + "," + format_number(eff.Delta_tilde) + "," +
                           format_number(eff.omega_tilde) + "," + format_number(eff.t_plus) + "," +
                           format_number(eff.t_minus) + "," + format_number(eff.f_plus) + "," +
                           format_number(eff.f_minus) + "," + format_number(eff.f) + ",";
    ASSERT_EQ(values.rfind(expected, 0), 0u) << values;
}

TEST(cli, pseudospin_zero_gradient_and_mapping) {
    TempDir dir;
    auto path = dir.write("flat.json", device_json(0.0));
    auto rows = run_json({"pseudospin-map", "--config", path, "--m", "2", "--n", "1"});
    ASSERT_EQ(rows[0]["Delta_tilde"].get<double>(), 1);
    ASSERT_EQ(rows[0]["feasible"], false);
    ASSERT_NEAR(rows[0]["delta_residual"].get<double>(), 2, 1e-12);

    auto r = run_cli({"pseudospin-map", "--config", path, "--m", "2", "--n", "1"});
    ASSERT_EQ(r.code, 0);
    ASSERT_NE(r.err.find("infeasible: anisotropy"), std::string::npos);
    ASSERT_EQ(run_cli({"pseudospin-map", "--config", path, "--m", "2"}).code, cli::EXIT_USAGE);
}

TEST(cli, pseudospin_singularities) {
    TempDir dir;
    // zeeman 0.25 without gradient gives omega = 0.5 = U - V.
    auto resonant = dir.write("resonant.json", device_json(0.0, 0.25, 1.0, 0.5));
    auto r = run_cli({"pseudospin-map", "--config", resonant});
    ASSERT_EQ(r.code, cli::EXIT_SINGULARITY);
    ASSERT_NE(r.err.find("resonance"), std::string::npos);

    auto degenerate = dir.write("degenerate.json", device_json(0.1, 0.5));
    ASSERT_EQ(run_cli({"pseudospin-map", "--config", degenerate}).code, cli::EXIT_SINGULARITY);

    auto equal = dir.write("equal.json", device_json(0.1, 0.2, 0.3, 0.3));
    ASSERT_EQ(run_cli({"pseudospin-map", "--config", equal}).code, cli::EXIT_SINGULARITY);
}

TEST(cli, pseudospin_schema_errors_name_the_field) {
    TempDir dir;
    auto check = [&](const std::string &content, const std::string &needle) {
        auto path = dir.write("bad.json", content);
        auto r = run_cli({"pseudospin-map", "--config", path});
        ASSERT_EQ(r.code, cli::EXIT_USAGE);
        ASSERT_NE(r.err.find(needle), std::string::npos) << r.err;
    };
    auto good = nlohmann::json::parse(device_json(0.1));

    auto missing = good;
    missing["dot_j"].erase("zeeman_z");
    check(missing.dump(), "dot_j.zeeman_z: missing");

    auto typed = good;
    typed["coupling"]["t12"] = "0.02";
    check(typed.dump(), "coupling.t12: expected a number");

    auto extra = good;
    extra["dot_i"]["mass"] = 1;
    check(extra.dump(), "dot_i.mass: unknown field");

    auto top = good;
    top["comment"] = "x";
    check(top.dump(), "config.comment: unknown field");

    auto no_section = good;
    no_section.erase("coupling");
    check(no_section.dump(), "coupling: missing");

    check("{not json", "not valid JSON");
    check("[1, 2]", "top level");

    ASSERT_EQ(run_cli({"pseudospin-map", "--config", dir.file("absent.json")}).code, cli::EXIT_USAGE);
}

TEST(cli, verify_dynamics) {
    auto ok = run_json({"verify-dynamics", "--cases", "100", "--determinant-cases", "100"});
    ASSERT_EQ(ok.size(), 2u);
    ASSERT_LT(ok[0]["max_deviation"].get<double>(), 1e-10);
    ASSERT_EQ(ok[1]["passed"], true);
    ASSERT_EQ(run_cli({"verify-dynamics", "--seed", "31337", "--cases", "50"}).code, 0);

    auto bad = run_cli({"verify-dynamics", "--cases", "50", "--determinant-cases", "50", "--inject-fault"});
    ASSERT_EQ(bad.code, cli::EXIT_VERIFICATION_FAILED);
}
