// Copyright 2026 The qfid Authors
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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "cli/spec_io.h"
#include "nlohmann/json.hpp"
#include "qfid/fidelity.h"
#include "test_support.h"

using namespace qfid;
using namespace qfid::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome six_state_vs_definition() {
    constexpr int kChannels = 100;
    constexpr int64_t kSamples = 1000000;
    auto start = Clock::now();
    Rng rng = make_stream(1001);
    double worst_quad = 0;
    double worst_z = 0;
    for (int k = 0; k < kChannels; k++) {
        auto u = random_unitary(rng);
        Channel s = random_cptp(rng, 1 + k % 4);
        double six = avg_fidelity_six(u, s).value;
        worst_quad = std::max(worst_quad, std::abs(six - avg_fidelity_quadrature(u, s).value));
        auto mc = avg_fidelity_mc(u, s, {kSamples, uint64_t(k), 1});
        worst_z = std::max(worst_z, std::abs(mc.value - six) / *mc.std_error);
    }
    double elapsed = seconds_since(start);
    bool pass = worst_quad <= 1e-10 && worst_z <= 5 && elapsed <= 60;
    return {pass, "max |six-quad| " + fmt(worst_quad) + ", max MC deviation " + fmt(worst_z) + " sigma, " +
                      fmt(elapsed) + " s"};
}

double three_state_gap(const UnitaryGate &u, const Channel &s) {
    double six = avg_fidelity_six(u, s).value;
    return std::max(std::abs(avg_fidelity_three(u, s, AxisSign::plus).value - six),
                    std::abs(avg_fidelity_three(u, s, AxisSign::minus).value - six));
}

Outcome unital_reduction() {
    Rng rng = make_stream(1002);
    double worst = 0;
    int unital = 0;
    for (int k = 0; k < 100; k++) {
        auto u = random_unitary(rng);
        Channel s = random_unital(rng);
        unital += is_unital(s);
        worst = std::max(worst, three_state_gap(u, s));
    }
    return {worst <= 1e-10 && unital == 100, "max |three-six| " + fmt(worst) + ", unital " + std::to_string(unital) +
                                                 "/100"};
}

Outcome non_unital_identities() {
    Rng rng = make_stream(1003);
    double worst = 0;
    int non_unital = 0;
    for (int k = 0; k < 100; k++) {
        auto u = random_unitary(rng);
        Channel s = random_non_unital(rng, k);
        non_unital += !is_unital(s) && is_cptp(s);
        worst = std::max(worst, three_state_gap(u, s));
    }
    return {worst <= 1e-10 && non_unital == 100,
            "max |three-six| " + fmt(worst) + ", non-unital CPTP " + std::to_string(non_unital) + "/100"};
}

Outcome closed_form_values() {
    auto identity = UnitaryGate::identity();
    double worst = 0;
    for (int k = 0; k <= 10; k++) {
        double p = k / 10.0;
        Channel s = preset("depolarizing", {{"p", p}});
        worst = std::max(worst, std::abs(avg_fidelity_six(identity, s).value - (1 - p / 2)));
        worst = std::max(worst, std::abs(avg_fidelity_quadrature(identity, s).value - (1 - p / 2)));
    }
    bool half_exact = avg_fidelity_six(identity, preset("depolarizing", {{"p", 1}})).value == 0.5;

    Rng rng = make_stream(1004);
    for (int k = 0; k < 100; k++) {
        auto u = random_unitary(rng);
        worst = std::max(worst, std::abs(avg_fidelity_six(u, conjugation(u)).value - 1));
    }
    Channel x = conjugation(UnitaryGate::make(kPauliX));
    worst = std::max(worst, std::abs(avg_fidelity_six(identity, x).value - 1.0 / 3));
    worst = std::max(worst, std::abs(avg_fidelity_quadrature(identity, x).value - 1.0 / 3));
    return {worst <= 1e-12 && half_exact,
            "max error " + fmt(worst) + ", depolarizing(1) exact 1/2: " + (half_exact ? "yes" : "no")};
}

Outcome unitary_pair_law() {
    Rng rng = make_stream(1005);
    double worst = 0;
    for (int k = 0; k < 1000; k++) {
        auto u = random_unitary(rng);
        auto v = random_unitary(rng);
        double six = avg_fidelity_six(u, conjugation(v)).value;
        worst = std::max(worst, std::abs(six - unitary_pair_fidelity(u, v)));
        worst = std::max(worst, std::abs(six - avg_fidelity_quadrature(u, conjugation(v)).value));
    }
    return {worst <= 1e-10, "max error " + fmt(worst) + " over 1000 pairs"};
}

Outcome sphere_moments() {
    constexpr int kDraws = 1000000;
    double worst_quad = 0;
    for (size_t j = 0; j < 3; j++) {
        for (size_t l = 0; l < 3; l++) {
            double moment = 0;
            for (const auto &node : sphere_quadrature()) {
                moment += node.weight * node.point[j] * node.point[l];
            }
            worst_quad = std::max(worst_quad, std::abs(moment - (j == l ? 1.0 / 3 : 0.0)));
        }
    }

    std::array<std::vector<double>, 9> products;
    for (auto &p : products) {
        p.resize(kDraws);
    }
    Rng rng = make_stream(1006);
    for (int n = 0; n < kDraws; n++) {
        auto r = sample_pure_uniform(rng).bloch.as_array();
        for (size_t j = 0; j < 3; j++) {
            for (size_t l = 0; l < 3; l++) {
                products[3 * j + l][n] = r[j] * r[l];
            }
        }
    }
    double worst_z = 0;
    for (size_t j = 0; j < 3; j++) {
        for (size_t l = 0; l < 3; l++) {
            const auto &values = products[3 * j + l];
            double mean = pairwise_sum(values) / kDraws;
            std::vector<double> sq(kDraws);
            for (int n = 0; n < kDraws; n++) {
                sq[n] = (values[n] - mean) * (values[n] - mean);
            }
            double std_error = std::sqrt(pairwise_sum(sq) / (kDraws - 1) / kDraws);
            worst_z = std::max(worst_z, std::abs(mean - (j == l ? 1.0 / 3 : 0.0)) / std_error);
        }
    }
    return {worst_quad <= 1e-14 && worst_z <= 5,
            "quadrature max error " + fmt(worst_quad) + ", MC max deviation " + fmt(worst_z) + " sigma"};
}

Outcome fidelity_definitions() {
    Rng rng = make_stream(1007);
    double worst_pure = 0;
    double worst_self = 0;
    double worst_sym = 0;
    for (int k = 0; k < 1000; k++) {
        auto psi = random_pure(rng);
        auto rho = random_density(rng);
        double general = state_fidelity(psi, rho);
        worst_pure = std::max(worst_pure, std::abs(general - pure_state_fidelity(psi, rho)));
        worst_self = std::max(worst_self, std::abs(state_fidelity(rho, rho) - 1));
        auto sigma = random_density(rng);
        worst_sym = std::max(worst_sym, std::abs(state_fidelity(rho, sigma) - state_fidelity(sigma, rho)));
        worst_sym = std::max(worst_sym, std::abs(state_fidelity(rho, psi) - general));
    }
    return {worst_pure <= 1e-10 && worst_self <= 1e-10 && worst_sym <= 1e-12,
            "pure vs general " + fmt(worst_pure) + ", |F(rho,rho)-1| " + fmt(worst_self) + ", asymmetry " +
                fmt(worst_sym)};
}

Outcome cptp_gate() {
    int passed = 0;
    auto grid = preset_grid();
    for (const auto &named : grid) {
        passed += is_cptp(named.channel);
    }
    auto d = diagnose(Channel{transpose_map()});
    bool transpose_ok = !d.cptp && std::abs(d.min_choi_eigenvalue + 0.5) <= 1e-10;
    return {passed == int(grid.size()) && transpose_ok,
            "presets CPTP " + std::to_string(passed) + "/" + std::to_string(grid.size()) +
                ", transpose min Choi eigenvalue " + cli::format_number(d.min_choi_eigenvalue)};
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run_cli(args, out, err);
    return {code, out.str()};
}

double first_value(const std::string &jsonl) {
    return nlohmann::json::parse(jsonl.substr(0, jsonl.find('\n')))["value"].get<double>();
}

Outcome cli_contract(Clock::time_point suite_start) {
    auto dir = std::filesystem::temp_directory_path() / "qfid_acceptance";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string &name, const std::string &body) {
        auto path = (dir / name).string();
        std::ofstream(path) << body;
        return path;
    };
    auto x_kraus = write("x_kraus.json", R"({"kraus": [[[[0, 0], [1, 0]], [[1, 0], [0, 0]]]]})");
    auto transpose = write(
        "transpose.json", R"({"affine": {"matrix": [[1, 0, 0], [0, -1, 0], [0, 0, 1]], "translation": [0, 0, 0]}})");
    auto identity = write(
        "identity.json", R"({"affine": {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "translation": [0, 0, 0]}})");

    struct Example {
        std::vector<std::string> args;
        std::function<bool(const CliRun &)> check;
    };
    std::vector<Example> examples{
        {{"avg", "--target", "I", "--channel", "preset:depolarizing:p=1", "--method", "six-state", "--output",
          "jsonl"},
         [](const CliRun &r) { return r.code == 0 && first_value(r.out) == 0.5; }},
        {{"avg", "--target", "X", "--channel", x_kraus, "--method", "all", "--seed", "3", "--output", "jsonl"},
         [](const CliRun &r) {
             std::istringstream lines(r.out);
             int count = 0;
             bool ok = r.code == 0;
             for (std::string line; std::getline(lines, line);) {
                 auto rec = nlohmann::json::parse(line);
                 if (rec.contains("value")) {
                     ok = ok && std::abs(rec["value"].get<double>() - 1) <= 1e-12;
                     count++;
                 }
             }
             return ok && count == 6;
         }},
        {{"avg", "--target", "I", "--channel", "preset:depolarizing:p=0.2", "--method", "all", "--seed", "0",
          "--output", "jsonl"},
         [](const CliRun &r) {
             std::istringstream lines(r.out);
             bool ok = r.code == 0;
             for (std::string line; std::getline(lines, line);) {
                 auto rec = nlohmann::json::parse(line);
                 if (rec.contains("value") && rec["method"] != "monte_carlo") {
                     ok = ok && std::abs(rec["value"].get<double>() - 0.9) <= 1e-10;
                 }
             }
             return ok;
         }},
        {{"check", "--channel", "preset:amplitude_damping:gamma=0.3"},
         [](const CliRun &r) {
             return r.code == 0 && r.out.find("CPTP: yes\n") != std::string::npos &&
                    r.out.find("unital: no\n") != std::string::npos;
         }},
        {{"check", "--channel", transpose},
         [](const CliRun &r) {
             return r.code == 3 && r.out.find("CPTP: no\n") != std::string::npos &&
                    r.out.find("min_choi_eigenvalue: -0.49999999999999") != std::string::npos;
         }},
        {{"check", "--channel", "preset:depolarizing:p=0.5"},
         [](const CliRun &r) {
             return r.code == 0 && r.out.find("CPTP: yes\n") != std::string::npos &&
                    r.out.find("unital: yes\n") != std::string::npos;
         }},
        {{"convert", "--channel", "preset:depolarizing:p=0.4", "--to", "affine"},
         [](const CliRun &r) {
             if (r.code != 0) {
                 return false;
             }
             auto map = std::get<cli::AffineSpec>(cli::parse_channel_spec(r.out, "stdout")).map;
             return max_abs_diff(map.m, RealMatrix3::diag(0.6, 0.6, 0.6)) <= 1e-12 && map.t.norm() == 0;
         }},
        {{"convert", "--channel", identity, "--to", "kraus"},
         [](const CliRun &r) {
             if (r.code != 0) {
                 return false;
             }
             auto ops = std::get<cli::KrausSpec>(cli::parse_channel_spec(r.out, "stdout")).ops;
             return ops.size() == 1 && max_abs_diff(ops[0], kPauliI) <= 1e-9;
         }},
    };

    int matched = 0;
    int identical = 0;
    for (const auto &example : examples) {
        auto first = cli_run(example.args);
        auto second = cli_run(example.args);
        matched += example.check(first);
        identical += first.out == second.out && first.code == second.code;
    }

    // Random round trip kraus -> affine -> kraus.
    Rng rng = make_stream(1009);
    double worst_round_trip = 0;
    for (int k = 0; k < 20; k++) {
        auto s = random_cptp(rng, 1 + k % 4);
        auto original = write("round_trip.json", cli::write_channel_spec(s));
        auto affine = write("round_trip_affine.json", cli_run({"convert", "--channel", original, "--to", "affine"}).out);
        auto kraus = cli_run({"convert", "--channel", affine, "--to", "kraus"});
        Channel back = cli::resolve_channel(cli::parse_channel_spec(kraus.out, "stdout"));
        for (Axis axis : kAllAxes) {
            worst_round_trip = std::max(
                worst_round_trip,
                max_abs_diff(qfid::apply(back, axial_state(axis)).matrix(), qfid::apply(Channel{s}, axial_state(axis)).matrix()));
        }
    }
    std::filesystem::remove_all(dir);

    double elapsed = seconds_since(suite_start);
    int total = int(examples.size());
    bool pass = matched == total && identical == total && worst_round_trip <= 1e-9 && elapsed <= 300;
    return {pass, "examples " + std::to_string(matched) + "/" + std::to_string(total) + " match, " +
                      std::to_string(identical) + "/" + std::to_string(total) + " byte-identical reruns, round trip " +
                      fmt(worst_round_trip) + ", acceptance wall-clock " + fmt(elapsed) + " s"};
}

}  // namespace

int main() {
    auto suite_start = Clock::now();
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"six-state formula vs quadrature and Monte Carlo", six_state_vs_definition},
        {"unital three-state reduction", unital_reduction},
        {"three-state identities on non-unital channels", non_unital_identities},
        {"closed-form spot values", closed_form_values},
        {"unitary-vs-unitary law", unitary_pair_law},
        {"sphere second moments", sphere_moments},
        {"state fidelity definitions", fidelity_definitions},
        {"CPTP gate", cptp_gate},
        {"CLI contract", [&] { return cli_contract(suite_start); }},
    };

    int failures = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        Outcome outcome;
        try {
            outcome = criteria[k].second();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += !outcome.pass;
        std::printf("criterion %zu: %s  %s (%s)\n", k + 1, outcome.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
