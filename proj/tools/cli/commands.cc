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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "cli/spec_io.h"
#include "json.hpp"
#include "qfid/error.h"
#include "qfid/fidelity.h"

namespace qfid::cli {

namespace {

struct AvgArgs {
    std::string target;
    std::string channel;
    std::string method = "six-state";
    int64_t samples = 100000;
    uint64_t seed = 0;
    int workers = 1;
    std::string output = "text";
};

struct ConvertArgs {
    std::string channel;
    std::string to;
};

const std::vector<std::pair<std::string, Method>> &cli_method_names() {
    static const std::vector<std::pair<std::string, Method>> names{
        {"six-state", Method::six_state},
        {"three-plus", Method::three_state_plus},
        {"three-minus", Method::three_state_minus},
        {"pauli", Method::pauli_trace},
        {"monte-carlo", Method::monte_carlo},
        {"quadrature", Method::quadrature},
    };
    return names;
}

Method method_from_cli(const std::string &name) {
    for (const auto &[cli_name, method] : cli_method_names()) {
        if (cli_name == name) {
            return method;
        }
    }
    throw ParseError("<command line>", 1, "--method", "unknown estimator '" + name + "'");
}

std::string optional_number(const std::optional<double> &v) {
    return v ? format_number(*v) : "-";
}

/// Largest |a - b| over pairs of deterministic estimators.
double max_deterministic_deviation(const std::vector<FidelityReport> &reports) {
    double deviation = 0;
    for (const auto &a : reports) {
        for (const auto &b : reports) {
            if (a.method != Method::monte_carlo && b.method != Method::monte_carlo) {
                deviation = std::max(deviation, std::abs(a.value - b.value));
            }
        }
    }
    return deviation;
}

void print_text(std::ostream &out, const std::vector<FidelityReport> &reports, bool with_deviation) {
    out << std::left << std::setw(20) << "method" << std::setw(26) << "value" << std::setw(26) << "std_error"
        << "samples\n";
    for (const auto &r : reports) {
        out << std::left << std::setw(20) << method_name(r.method) << std::setw(26) << format_number(r.value)
            << std::setw(26) << optional_number(r.std_error) << (r.samples ? std::to_string(*r.samples) : "-")
            << "\n";
    }
    if (with_deviation) {
        double deviation = max_deterministic_deviation(reports);
        out << "max pairwise deviation (deterministic estimators): " << format_number(deviation) << "\n";
    }
    std::vector<std::string> seen;
    for (const auto &r : reports) {
        for (const auto &w : r.warnings) {
            if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
                seen.push_back(w);
                out << "warning: " << w << "\n";
            }
        }
    }
}

void print_jsonl(std::ostream &out, const std::vector<FidelityReport> &reports, bool with_deviation) {
    for (const auto &r : reports) {
        out << "{\"method\":\"" << method_name(r.method) << "\",\"value\":" << format_number(r.value);
        if (r.std_error) {
            out << ",\"std_error\":" << format_number(*r.std_error);
        }
        if (r.samples) {
            out << ",\"samples\":" << *r.samples;
        }
        out << ",\"warnings\":" << nlohmann::json(r.warnings).dump() << "}\n";
    }
    if (with_deviation) {
        double deviation = max_deterministic_deviation(reports);
        out << "{\"max_pairwise_deviation\":" << format_number(deviation) << "}\n";
    }
}

int cmd_avg(const AvgArgs &args, std::ostream &out) {
    bool all = args.method == "all";
    std::optional<Method> method;
    if (!all) {
        method = method_from_cli(args.method);
    }
    UnitaryGate target = resolve_target(load_target_arg(args.target));
    Channel channel = resolve_channel(load_channel_arg(args.channel));
    MonteCarloOptions mc{args.samples, args.seed, args.workers};

    std::vector<FidelityReport> reports;
    if (all) {
        for (Method m : kAllMethods) {
            reports.push_back(avg_fidelity(m, target, channel, mc));
        }
    } else {
        reports.push_back(avg_fidelity(*method, target, channel, mc));
    }

    if (args.output == "jsonl") {
        print_jsonl(out, reports, all);
    } else {
        print_text(out, reports, all);
    }
    return kExitOk;
}

int cmd_check(const std::string &channel_arg, std::ostream &out) {
    Channel channel = resolve_channel(load_channel_arg(channel_arg));
    auto d = diagnose(channel);
    out << "trace_preservation_residual: " << format_number(d.trace_residual) << "\n";
    out << "min_choi_eigenvalue: " << format_number(d.min_choi_eigenvalue) << "\n";
    out << "unitality_residual: " << format_number(d.unital_residual) << "\n";
    out << "max_output_radius: " << format_number(d.max_output_radius) << "\n";
    out << "CPTP: " << (d.cptp ? "yes" : "no") << (d.borderline ? " (borderline)" : "") << "\n";
    out << "unital: " << (d.unital ? "yes" : "no") << "\n";
    return d.cptp ? kExitOk : kExitNotCptp;
}

int cmd_convert(const ConvertArgs &args, std::ostream &out, std::ostream &err) {
    ChannelSpec spec = load_channel_arg(args.channel);
    Channel channel = resolve_channel(spec);
    auto d = diagnose(channel);
    if (!d.cptp && !d.borderline) {
        throw QfidError(
            ErrorKind::not_cptp,
            "conversion requires a CPTP channel (min Choi eigenvalue " + format_residual(d.min_choi_eigenvalue) +
                ", trace residual " + format_residual(d.trace_residual) + ")",
            d.min_choi_eigenvalue);
    }
    if (d.borderline) {
        err << "warning: channel is borderline CPTP\n";
    }
    if (args.to == "affine") {
        out << write_channel_spec(to_affine(channel));
    } else {
        out << write_channel_spec(to_kraus(channel));
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Average fidelity of single-qubit channels against a target unitary", "qfid"};
    app.require_subcommand(1);

    std::vector<std::string> method_choices{"all"};
    for (const auto &[name, method] : cli_method_names()) {
        method_choices.push_back(name);
    }

    AvgArgs avg;
    auto *avg_cmd = app.add_subcommand("avg", "Estimate the average fidelity of a channel against a target");
    avg_cmd->add_option("--target", avg.target, "Named gate (I X Y Z H S T) or target spec file")->required();
    avg_cmd->add_option("--channel", avg.channel, "Channel spec file or preset:name:k=v[,k=v]")->required();
    avg_cmd->add_option("--method", avg.method, "Estimator")->check(CLI::IsMember(method_choices));
    avg_cmd->add_option("--samples", avg.samples, "Monte Carlo sample count");
    avg_cmd->add_option("--seed", avg.seed, "Monte Carlo seed");
    avg_cmd->add_option("--workers", avg.workers, "Monte Carlo worker threads")->check(CLI::PositiveNumber);
    avg_cmd->add_option("--output", avg.output, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));

    std::string check_channel;
    auto *check_cmd = app.add_subcommand("check", "Report trace preservation, complete positivity and unitality");
    check_cmd->add_option("--channel", check_channel, "Channel spec file or preset:name:k=v[,k=v]")->required();

    ConvertArgs convert;
    auto *convert_cmd = app.add_subcommand("convert", "Rewrite a channel spec in Kraus or affine form");
    convert_cmd->add_option("--channel", convert.channel, "Channel spec file or preset:name:k=v[,k=v]")
        ->required();
    convert_cmd->add_option("--to", convert.to, "kraus or affine")
        ->required()
        ->check(CLI::IsMember({"kraus", "affine"}));

    std::vector<const char *> argv{"qfid"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (avg_cmd->parsed()) {
            return cmd_avg(avg, out);
        }
        if (check_cmd->parsed()) {
            return cmd_check(check_channel, out);
        }
        return cmd_convert(convert, out, err);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const QfidError &e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace qfid::cli
