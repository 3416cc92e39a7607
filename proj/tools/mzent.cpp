// Copyright 2026 The mzent Authors
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

// mzent: post-selected entanglement via an ancilla in a Mach-Zehnder
// interferometer. Subcommands: demo, heatmap, decohere, optimize.

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "mzent/entanglement.hpp"
#include "mzent/feedback.hpp"
#include "mzent/io.hpp"
#include "mzent/optimizer.hpp"
#include "mzent/postselection.hpp"
#include "mzent/scenario.hpp"
#include "mzent/sweep.hpp"

namespace {

using namespace mzent;

double to_radians(double angle, bool degrees) {
    return degrees ? angle * std::numbers::pi / 180.0 : angle;
}

Cx parse_gamma(const std::string& text) {
    const std::size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return Cx{std::stod(text), 0.0};
        }
        return Cx{std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse gamma '" + text + "' (expected re or re,im)");
    }
}

void print_port_report(const Scenario& s, Port port, bool with_mixed) {
    const char* name = port_name(port);
    const ConditionalState cond = postselect_pure(s, port);
    const double prob = cond.probability();
    std::cout << "P_" << name << " = " << format_number(prob) << "\n";
    std::cout << name << " amplitudes:";
    for (const Cx& a : cond.amplitudes.amps) {
        std::cout << " " << format_complex(a);
    }
    std::cout << "\n";
    if (prob <= 1e-24) {
        std::cout << name << " entropy = n/a (dark port)\n";
    } else {
        std::cout << name << " entropy = " << format_number(entropy_of_entanglement(cond.amplitudes).value)
                  << "\n";
    }
    if (with_mixed) {
        const DensityMatrix rho = postselect_mixed(s, port);
        if (rho.trace_real() <= 1e-24) {
            std::cout << name << " mixed state = n/a (dark port)\n";
        } else {
            std::cout << name << " negativity = " << format_number(negativity(rho).value) << "\n";
            std::cout << name << " concurrence = " << format_number(concurrence(rho).value) << "\n";
        }
    }
}

int run_demo(double theta1, double theta2, const std::string& gamma_text, bool degrees) {
    const Cx gamma = parse_gamma(gamma_text);
    const Scenario s{CouplingAngle{to_radians(theta1, degrees)}, CouplingAngle{to_radians(theta2, degrees)},
                     EnvOverlap{gamma}};
    const bool with_mixed = std::abs(gamma - Cx{1.0, 0.0}) > 1e-15;
    std::cout << "theta1 = " << format_number(s.theta1.theta()) << "\n";
    std::cout << "theta2 = " << format_number(s.theta2.theta()) << "\n";
    std::cout << "gamma = " << format_complex(gamma) << "\n";
    print_port_report(s, Port::R, with_mixed);
    print_port_report(s, Port::U, with_mixed);
    return 0;
}

int run_heatmap(int grid_n, const std::string& out_csv, const std::string& out_svg) {
    const auto cells = heatmap_cells(grid_n);
    write_file(out_csv, heatmap_csv(cells));
    if (!out_svg.empty()) {
        write_file(out_svg, heatmap_svg(cells, grid_n));
    }
    return 0;
}

int run_decohere(double theta, int grid_n, const std::string& out_csv, bool degrees) {
    const CouplingAngle angle{to_radians(theta, degrees)};
    write_file(out_csv, decoherence_csv(decoherence_sweep(angle, grid_n)));
    return 0;
}

int run_optimize(double theta, double gain, double loss, int w_grid, int u_grid, int refine,
                 const std::string& e1_name, const std::string& out_csv, bool degrees) {
    GainConfig config;
    config.gain_G = gain;
    config.loss_L = loss;
    config.w_grid = w_grid;
    config.su2_grid = u_grid;
    config.refine_iters = refine;
    if (e1_name == "formation") {
        config.e1_measure = Measure::formation;
    } else if (e1_name == "negativity") {
        config.e1_measure = Measure::negativity;
    } else {
        throw std::invalid_argument("unknown E1 measure '" + e1_name + "' (formation or negativity)");
    }
    const CouplingAngle angle{to_radians(theta, degrees)};
    const Scenario s{angle, angle, EnvOverlap{}};

    std::vector<WProfilePoint> profile;
    const OptimizationResult result = optimize(s, config, &profile);
    write_file(out_csv, optimize_csv(profile));

    std::cout << "w_star = " << format_number(result.w_star) << "\n";
    std::cout << "u_star zyz angles = " << format_number(result.u_angles[0]) << " "
              << format_number(result.u_angles[1]) << " " << format_number(result.u_angles[2]) << "\n";
    std::cout << "N_star = " << format_number(result.n_star) << "\n";
    std::cout << "E1 at optimum = " << format_number(result.e1_at_opt.value) << " ("
              << measure_name(result.e1_at_opt.measure) << ")\n";
    std::cout << "probes = " << result.probe_count << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Post-selected two-qubit entanglement in a Mach-Zehnder interferometer"};
    app.set_config("--config", "", "Read defaults from a key = value file ('#' comments)");
    bool degrees = false;
    app.add_flag("--degrees", degrees, "Interpret angles as degrees");
    app.require_subcommand(1);

    auto* demo = app.add_subcommand("demo", "Report probabilities, conditional states and entanglement");
    double theta1 = 0.0, theta2 = 0.0;
    std::string gamma_text = "1";
    demo->add_option("--theta1", theta1, "Coupling angle on arm 1")->required();
    demo->add_option("--theta2", theta2, "Coupling angle on arm 2")->required();
    demo->add_option("--gamma", gamma_text, "Environment overlap, re or re,im (default 1)");

    auto* heatmap = app.add_subcommand("heatmap", "R-port entropy surface over (x1, x2)");
    int hm_grid = 50;
    std::string hm_csv, hm_svg;
    heatmap->add_option("--grid", hm_grid, "Grid points per axis")->check(CLI::Range(2, 4096));
    heatmap->add_option("--out", hm_csv, "Output CSV path")->required();
    heatmap->add_option("--svg", hm_svg, "Optional SVG heatmap path");

    auto* decohere = app.add_subcommand("decohere", "Entanglement of both ports vs environment overlap");
    double dc_theta = 0.0;
    int dc_grid = 21;
    std::string dc_csv;
    decohere->add_option("--theta", dc_theta, "Coupling angle (both arms)")->required();
    decohere->add_option("--grid", dc_grid, "Number of gamma samples")->check(CLI::Range(2, 1 << 20));
    decohere->add_option("--out", dc_csv, "Output CSV path")->required();

    auto* optimize_cmd = app.add_subcommand("optimize", "Maximize the net gain over w and the local unitary");
    double op_theta = 0.0, op_gain = 1.0, op_loss = 0.0;
    int op_wgrid = 41, op_ugrid = 11, op_refine = 2;
    std::string op_e1 = "formation", op_csv;
    optimize_cmd->add_option("--theta", op_theta, "Coupling angle (both arms)")->required();
    optimize_cmd->add_option("--gain", op_gain, "Gain G per unit of entanglement")->required();
    optimize_cmd->add_option("--loss", op_loss, "Loss L per discarded pair")->required();
    optimize_cmd->add_option("--w-grid", op_wgrid, "Retain-fraction grid points")->check(CLI::Range(2, 100000));
    optimize_cmd->add_option("--u-grid", op_ugrid, "Grid points per unitary angle")->check(CLI::Range(2, 1000));
    optimize_cmd->add_option("--refine", op_refine, "Golden-section refinement passes")
        ->check(CLI::Range(0, 1000));
    optimize_cmd->add_option("--e1", op_e1, "Entanglement measure: formation or negativity");
    optimize_cmd->add_option("--out", op_csv, "Output CSV path for the w profile")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*demo) {
            return run_demo(theta1, theta2, gamma_text, degrees);
        }
        if (*heatmap) {
            return run_heatmap(hm_grid, hm_csv, hm_svg);
        }
        if (*decohere) {
            return run_decohere(dc_theta, dc_grid, dc_csv, degrees);
        }
        if (*optimize_cmd) {
            return run_optimize(op_theta, op_gain, op_loss, op_wgrid, op_ugrid, op_refine, op_e1, op_csv,
                                degrees);
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
