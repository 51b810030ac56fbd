// Copyright 2026 The twopath Authors
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

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "twopath/twopath.h"
#include "verify.h"

namespace twopath::tools {

namespace {

std::vector<MeasurementOrder> selected_orders(OrderSelection sel) {
    switch (sel) {
        case OrderSelection::PathThenWave:
            return {MeasurementOrder::PathThenWave};
        case OrderSelection::WaveThenPath:
            return {MeasurementOrder::WaveThenPath};
        case OrderSelection::Both:
            break;
    }
    return {MeasurementOrder::PathThenWave, MeasurementOrder::WaveThenPath};
}

std::string gnuplot_scan(const std::string &csv_path) {
    return fmt::format(
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set xlabel 'phi [rad]'\n"
        "plot '{0}' using 1:2 with lines, '{0}' using 1:5 with lines, '{0}' using 1:6 with points\n",
        csv_path);
}

std::string gnuplot_sample(const std::string &csv_path) {
    return fmt::format(
        "set datafile separator ','\n"
        "set key autotitle columnhead\n"
        "set xlabel 'phi [rad]'\n"
        "plot '{0}' using 1:(strcol(2) eq 'wp' ? $4 : 1/0) title 'first mean (W first)' with points, \\\n"
        "     '{0}' using 1:(strcol(2) eq 'wp' ? $5 : 1/0) title 'first variance (W first)' with points, \\\n"
        "     '{0}' using 1:(strcol(2) eq 'pw' ? $6 : 1/0) title 'second mean (P first)' with points\n",
        csv_path);
}

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << contents;
    f.flush();
    if (!f) {
        throw IoError("failed writing '" + path + "'");
    }
}

}  // namespace

void RunConfig::validate() const {
    require(steps >= 1, "RunConfig: steps must be >= 1");
    require(phi_start <= phi_end, "RunConfig: --from must not exceed --to");
    require(std::isfinite(phi0) && std::isfinite(phi_start) && std::isfinite(phi_end),
            "RunConfig: angles must be finite");
    require(workers >= 1, "RunConfig: workers must be >= 1");
}

std::string format_number(double x) {
    return fmt::format("{:.17g}", x);
}

std::string cmd_scan(const RunConfig &config) {
    config.validate();
    PhaseAngle phi0(config.phi0);
    std::vector<PhaseAngle> grid = linspace(config.phi_start, config.phi_end, config.steps);
    ScanResult scan = interference_scan(phi0, grid);

    std::string out = kScanHeader;
    out += '\n';
    for (const ScanPoint &pt : scan.points) {
        UncertaintyReport r = duality_report(pt.phi, phi0);
        out += fmt::format("{},{},{},{},{},{},{}\n", format_number(pt.phi.radians()), format_number(pt.w_expect),
                           format_number(pt.p_expect), format_number(r.delta_p), format_number(r.delta_w),
                           format_number(r.bound), format_number(r.gap));
    }
    return out;
}

std::string cmd_sample(const RunConfig &config) {
    config.validate();
    require(config.shots >= 1, "RunConfig: shots must be >= 1");
    PhaseAngle phi0(config.phi0);
    std::vector<PhaseAngle> grid = linspace(config.phi_start, config.phi_end, config.steps);
    RandomStream rng(config.seed);

    std::string out = kSampleHeader;
    out += '\n';
    uint64_t row = 0;
    for (PhaseAngle phi : grid) {
        for (MeasurementOrder order : selected_orders(config.order)) {
            SequentialStats s =
                config.workers > 1
                    ? sequential_experiment_parallel(order, phi, phi0, config.shots,
                                                     RandomStream::substream(config.seed, row).seed(), config.workers)
                    : sequential_experiment(order, phi, phi0, config.shots, rng);
            UniformityResult u = uniformity_test(s.second_counts);
            out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", format_number(phi.radians()), order_token(order),
                               s.shots, format_number(s.first_mean), format_number(s.first_variance),
                               format_number(s.second_mean), format_number(s.second_variance), s.second_counts.n_plus,
                               s.second_counts.n_minus, format_number(u.chi2), u.pass ? 1 : 0);
            row++;
        }
    }
    return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Two-path interferometer: complementarity and uncertainty verification"};
    app.name("twopath");
    app.require_subcommand(1);

    RunConfig config;
    bool degrees = false;
    bool gnuplot = false;
    std::string order_text = "both";
    std::string out_path;
    std::string fault_text = "none";

    auto add_angles = [&](CLI::App *sub) {
        sub->add_option("--phi0", config.phi0, "Setup phase offset (radians)");
        sub->add_option("--from", config.phi_start, "First scan phase (radians)");
        sub->add_option("--to", config.phi_end, "Last scan phase (radians)");
        sub->add_option("--steps", config.steps, "Number of grid points")->check(CLI::PositiveNumber);
        sub->add_flag("--degrees", degrees, "Read --phi0/--from/--to in degrees");
        sub->add_option("--out", out_path, "Output CSV path (default: standard output)");
        sub->add_flag("--gnuplot", gnuplot, "Also write a gnuplot script to <out>.gp");
    };

    CLI::App *scan = app.add_subcommand("scan", "Analytic interference fringe and uncertainty table");
    add_angles(scan);

    CLI::App *sample = app.add_subcommand("sample", "Monte Carlo sequential path/wave measurements");
    add_angles(sample);
    sample->add_option("--shots", config.shots, "Shots per grid point and order")->check(CLI::PositiveNumber);
    sample->add_option("--seed", config.seed, "Random seed");
    sample->add_option("--order", order_text, "Measurement order")->check(CLI::IsMember({"pw", "wp", "both"}));
    sample->add_option("--workers", config.workers, "Worker threads (independent sub-streams)")
        ->check(CLI::PositiveNumber);

    VerifyOptions verify_options;
    CLI::App *verify = app.add_subcommand("verify", "Run the invariant suite; exit 0 iff all checks pass");
    verify->add_option("--shots", verify_options.shots, "Also run Monte Carlo checks with this many shots");
    verify->add_option("--seed", verify_options.seed, "Random seed");
    verify->add_option("--inject-fault", fault_text)
        ->check(CLI::IsMember({"none", "beam-splitter", "basis"}))
        ->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            static const std::map<std::string, InjectedFault> faults = {
                {"none", InjectedFault::None},
                {"beam-splitter", InjectedFault::BeamSplitter},
                {"basis", InjectedFault::NonComplementaryBasis},
            };
            verify_options.fault = faults.at(fault_text);
            bool ok = print_report(run_verification(verify_options), out);
            return ok ? kExitOk : kExitVerificationFailed;
        }

        if (degrees) {
            // Only user-supplied values are in degrees; defaults stay radians.
            constexpr double to_rad = std::numbers::pi / 180;
            CLI::App *active = scan->parsed() ? scan : sample;
            for (auto [name, value] : {std::pair{"--phi0", &config.phi0}, std::pair{"--from", &config.phi_start},
                                       std::pair{"--to", &config.phi_end}}) {
                if (active->count(name) > 0) {
                    *value *= to_rad;
                }
            }
        }
        if (!out_path.empty()) {
            config.output_path = out_path;
        }
        if (order_text == "pw") {
            config.order = OrderSelection::PathThenWave;
        } else if (order_text == "wp") {
            config.order = OrderSelection::WaveThenPath;
        }
        if (gnuplot && !config.output_path) {
            err << "twopath: --gnuplot requires --out\n";
            return kExitUsage;
        }

        std::string csv = scan->parsed() ? cmd_scan(config) : cmd_sample(config);
        if (config.output_path) {
            write_file(*config.output_path, csv);
            if (gnuplot) {
                write_file(*config.output_path + ".gp",
                           scan->parsed() ? gnuplot_scan(*config.output_path) : gnuplot_sample(*config.output_path));
            }
        } else {
            out << csv;
        }
        return kExitOk;
    } catch (const ValidationError &e) {
        err << "twopath: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        err << "twopath: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace twopath::tools
