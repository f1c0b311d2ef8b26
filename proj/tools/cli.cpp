// Copyright 2026 The QDM Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdm/errors.hpp"
#include "qdm/report.hpp"
#include "qdm/scenario.hpp"
#include "qdm/verify.hpp"

namespace qdm::cli {

namespace {

struct Invocation {
    std::string scenario_path;
    std::string example_name;
    std::string output_path;
    std::string emit_name;
    std::string only;
    std::vector<std::string> tolerances;
    std::optional<std::uint64_t> seed;
};

struct IoFailure {
    std::string message;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoFailure{"cannot open '" + path + "'"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoFailure{"error reading '" + path + "'"};
    }
    return buf.str();
}

void write_output(const Invocation &inv, const std::string &text, std::ostream &out) {
    if (inv.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(inv.output_path, std::ios::binary | std::ios::trunc);
    file << text;
    file.close();
    if (!file) {
        throw IoFailure{"cannot write '" + inv.output_path + "'"};
    }
}

Tolerances tolerances(const Invocation &inv) {
    Tolerances tol;
    for (const std::string &t : inv.tolerances) {
        apply_tolerance_override(tol, t);
    }
    return tol;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

int cmd_run(const Invocation &inv, std::ostream &out, std::ostream &err) {
    const Tolerances tol = tolerances(inv);
    Scenario scenario;
    if (!inv.example_name.empty()) {
        auto found = find_builtin(inv.example_name);
        if (!found) {
            err << "error: unknown example '" << inv.example_name
                << "'; `qdm examples` lists them\n";
            return kValidationError;
        }
        scenario = std::move(*found);
    } else {
        scenario = parse_scenario(read_file(inv.scenario_path));
    }
    const RunReport report = build_report(scenario, tol, inv.seed);
    write_output(inv, emit_report(report), out);
    for (const auto &[name, check] : report.checks) {
        if (!check.passed) {
            err << "warning: check " << name << " failed (deviation " << fmt(check.deviation)
                << ")\n";
        }
    }
    return kOk;
}

int cmd_examples(const Invocation &inv, std::ostream &out, std::ostream &err) {
    const auto builtins = builtin_scenarios();
    if (!inv.emit_name.empty()) {
        const auto it = std::find_if(builtins.begin(), builtins.end(),
                                     [&](const auto &b) { return b.name == inv.emit_name; });
        if (it == builtins.end()) {
            err << "error: unknown example '" << inv.emit_name << "'\n";
            return kValidationError;
        }
        write_output(inv, serialize_scenario(it->scenario), out);
        return kOk;
    }
    std::size_t width = 0;
    for (const auto &b : builtins) {
        width = std::max(width, b.name.size());
    }
    for (const auto &b : builtins) {
        out << b.name << std::string(width - b.name.size() + 2, ' ') << b.description << '\n';
    }
    return kOk;
}

int cmd_verify(const Invocation &inv, std::ostream &out, std::ostream &err) {
    VerifyOptions options;
    options.tol = tolerances(inv);
    if (!inv.only.empty()) {
        options.only = inv.only;
    }
    if (inv.seed) {
        options.seed = *inv.seed;
    }
    const auto results = run_verify(options);
    std::size_t failed = 0;
    for (const CheckOutcome &c : results) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  deviation=" << fmt(c.deviation)
            << " tolerance=" << fmt(c.tolerance) << '\n';
        if (!c.passed) {
            ++failed;
            err << "check " << c.name << " failed: deviation " << fmt(c.deviation)
                << " exceeds " << fmt(c.tolerance) << '\n';
        }
    }
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kOk : kVerifyFailed;
}

} // namespace

int main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"State-vector simulator for the deliberating machine", "qdm"};
    app.require_subcommand(1);
    Invocation inv;

    auto *run = app.add_subcommand("run", "run a scenario and print its report");
    auto *scenario_opt =
        run->add_option("--scenario", inv.scenario_path, "scenario document (JSON)");
    auto *example_opt = run->add_option("--example", inv.example_name, "built-in scenario name");
    scenario_opt->excludes(example_opt);
    run->add_option("--out", inv.output_path, "write the report here instead of stdout");
    run->add_option("--seed", inv.seed, "measure C with this seed");
    run->add_option("--tolerance", inv.tolerances, "override a tolerance, key=value")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    run->callback([&] {
        if (inv.scenario_path.empty() && inv.example_name.empty()) {
            throw CLI::ValidationError("run", "one of --scenario or --example is required");
        }
    });

    auto *examples = app.add_subcommand("examples", "list the built-in scenarios");
    examples->add_option("--emit", inv.emit_name, "print this scenario's document");
    examples->add_option("--out", inv.output_path, "write the document here");

    auto *verify = app.add_subcommand("verify", "run the self-check suites");
    verify->add_option("--only", inv.only, "run one suite");
    verify->add_option("--seed", inv.seed, "seed for the randomized suites");
    verify->add_option("--tolerance", inv.tolerances, "override a tolerance, key=value")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (*run) {
            return cmd_run(inv, out, err);
        }
        if (*examples) {
            return cmd_examples(inv, out, err);
        }
        return cmd_verify(inv, out, err);
    } catch (const IoFailure &e) {
        err << "error: " << e.message << '\n';
        return kIoError;
    } catch (const qdm::ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const qdm::Error &e) {
        err << "invalid: " << e.what() << '\n';
        return kValidationError;
    }
}

} // namespace qdm::cli
