// Copyright 2026 The kposim Authors
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

#include <CLI11.hpp>
#include <iostream>

#include "kposim/output.hpp"

namespace {

using namespace kposim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAnalysis = 2;
constexpr int kExitPhysics = 3;

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    int jobs = -1;
    int fock_cutoff = -1;
    std::string grid;  // MIN:MAX:STEP
};

RunConfig effective_config(const CliOptions& o) {
    RunConfig c = o.config_path.empty() ? RunConfig{} : load_config(o.config_path);
    if (!o.out_dir.empty()) c.out_dir = o.out_dir;
    if (o.jobs >= 0) c.jobs = o.jobs;
    if (o.fock_cutoff >= 0) c.fock_cutoff = o.fock_cutoff;
    if (!o.grid.empty()) {
        double mn, mx, st;
        if (std::sscanf(o.grid.c_str(), "%lf:%lf:%lf", &mn, &mx, &st) != 3)
            throw ConfigError("--grid must be MIN:MAX:STEP");
        c.grid_min_mhz = mn;
        c.grid_max_mhz = mx;
        c.grid_step_mhz = st;
    }
    c.validate();
    return c;
}

std::string out_path(const RunConfig& c, const std::string& name) {
    return c.out_dir + "/" + name;
}

SweepOptions sweep_options(const RunConfig& c) {
    SweepOptions o;
    o.t_final_us = c.t_final_us;
    o.jobs = c.jobs;
    return o;
}

int cmd_sweep(const RunConfig& c) {
    const SystemParams p = c.system_params().with_lambda_p(kTwoPi * c.lambda_p_mhz);
    const HilbertSpec space(c.fock_cutoff);

    const ConvergenceReport conv = convergence_check(p, space);
    if (!conv.passed) {
        std::cerr << "error: Fock-truncation convergence check failed (difference "
                  << conv.difference << ")\n";
        return kExitPhysics;
    }

    const SweepResult s =
        sweep(p, space, {c.grid_min_mhz, c.grid_max_mhz, c.grid_step_mhz}, sweep_options(c));
    write_file(out_path(c, "sweep.csv"), sweep_csv(s));

    std::vector<ExtremumPoint> extrema;
    try {
        extrema = find_extrema(s, c.prominence_main);
    } catch (const NoExtrema& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
    write_file(out_path(c, "extrema.json"), extrema_json(extrema, c).dump(2) + "\n");

    const auto dips = principal_dips(extrema, 2);
    if (dips.size() == 2) {
        const EstimationReport r = make_report(extrema, p, space);
        write_file(out_path(c, "estimation.json"), estimation_json(r, c).dump(2) + "\n");
        std::cout << "dips at " << r.dip_low_mhz << " / " << r.dip_high_mhz
                  << " MHz, splitting " << r.splitting_mhz << " MHz, alpha_est^2 = "
                  << r.alpha_est_sq << ", eps1 = " << r.eps1 << ", eps2 = " << r.eps2 << "\n";
    } else {
        std::cout << "found " << dips.size() << " principal dip(s); no estimation report\n";
    }
    return kExitOk;
}

int cmd_scan(const RunConfig& c) {
    const SystemParams base = c.system_params().with_lambda_p(kTwoPi * c.lambda_p_mhz);
    const HilbertSpec space(c.fock_cutoff);
    const ScanMode mode = (c.scan_mode == "constrained") ? ScanMode::Constrained : ScanMode::FixedBeta;

    ScanOptions o;
    o.constraint_mhz = c.scan_constraint_mhz;
    o.window_half_mhz = c.scan_window_half_mhz;
    o.step_mhz = c.grid_step_mhz;
    o.sweep = sweep_options(c);

    const auto rows = scan_detuning(base, space, c.scan_delta_mhz, mode, o);
    write_file(out_path(c, "scan.csv"), scan_csv(rows));
    write_file(out_path(c, "scan.json"), scan_json(rows, c).dump(2) + "\n");

    size_t usable = 0;
    for (const auto& r : rows)
        if (!r.skipped) ++usable;
    std::cout << rows.size() << " rows (" << usable << " bifurcated)\n";
    if (usable == 0) {
        std::cerr << "error: no scan row produced an estimate "
                     "(bifurcation check failed or no dips detected)\n";
        return kExitPhysics;
    }
    return kExitOk;
}

int cmd_eigen(const RunConfig& c) {
    const SystemParams p = c.system_params();
    const HilbertSpec space(c.fock_cutoff);
    SpectrumTable s = spectrum(p, space);
    const double alpha = std::sqrt(true_photon_number(p, space));
    label_spectrum(s, alpha, space);
    const auto transitions = transition_table(s, std::min(7, space.total_dim() - 1));
    write_file(out_path(c, "eigen.json"), eigen_json(s, transitions, c).dump(2) + "\n");
    for (int k = 0; k < 6; ++k)
        std::cout << "level " << k << ": " << s.eigenvalues_mhz[k] << " MHz  " << s.labels[k]
                  << " (overlap " << s.overlaps[k] << ")\n";
    return kExitOk;
}

int cmd_resonances(const RunConfig& c) {
    const SystemParams p = c.system_params();
    const HilbertSpec space(c.fock_cutoff);
    const double alpha = std::sqrt(true_photon_number(p, space));
    const auto rs = resonance_frequencies(c.g_mhz, alpha);
    write_file(out_path(c, "resonances.json"), resonances_json(rs, alpha, c).dump(2) + "\n");
    for (const auto& r : rs)
        std::cout << r.origin << ": " << r.freq_mhz << " MHz (order " << r.order << ")\n";
    return kExitOk;
}

int cmd_steady(const RunConfig& c) {
    const SystemParams p = c.system_params();
    const HilbertSpec space(c.fock_cutoff);
    const double n = true_photon_number(p, space);
    const ConvergenceReport conv = convergence_check(p, space);
    const BifurcationCheck bif = bifurcation_check(p, space);
    write_file(out_path(c, "steady.json"), steady_json(n, conv, bif, c).dump(2) + "\n");
    std::cout << "Tr[rho_ss a^dag a] = " << n << " (convergence "
              << (conv.passed ? "passed" : "FAILED") << ", difference " << conv.difference << ")\n";
    if (!conv.passed) return kExitPhysics;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"KPO + ancilla-qubit spectroscopy simulator"};
    app.require_subcommand(1);

    CliOptions o;
    app.fallthrough();  // accept the global flags after the subcommand too
    app.add_option("--config", o.config_path, "TOML-style config file");
    app.add_option("--out", o.out_dir, "output directory (overrides config)");
    app.add_option("--jobs", o.jobs, "worker threads for sweeps/scans (0 = auto)");
    app.add_option("--fock-cutoff", o.fock_cutoff, "override Fock cutoff");
    app.add_option("--grid", o.grid, "sweep grid MIN:MAX:STEP in MHz");

    auto* sub_sweep = app.add_subcommand("sweep", "detuning sweep -> spectrum, extrema, estimate");
    auto* sub_scan = app.add_subcommand("scan", "KPO-detuning scan of the estimation errors");
    auto* sub_eigen = app.add_subcommand("eigen", "static-Hamiltonian spectrum and transitions");
    auto* sub_res = app.add_subcommand("resonances", "perturbative resonance predictions");
    auto* sub_steady = app.add_subcommand("steady", "bare-KPO steady-state photon number");

    CLI11_PARSE(app, argc, argv);

    try {
        const kposim::RunConfig c = effective_config(o);
        if (sub_sweep->parsed()) return cmd_sweep(c);
        if (sub_scan->parsed()) return cmd_scan(c);
        if (sub_eigen->parsed()) return cmd_eigen(c);
        if (sub_res->parsed()) return cmd_resonances(c);
        if (sub_steady->parsed()) return cmd_steady(c);
    } catch (const kposim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const kposim::NoExtrema& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return kExitAnalysis;
    } catch (const kposim::BelowBifurcation& e) {
        std::cerr << "physics validation error: " << e.what() << "\n";
        return kExitPhysics;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAnalysis;
    }
    return kExitOk;
}
