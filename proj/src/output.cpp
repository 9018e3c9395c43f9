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

#include "kposim/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kposim {

std::string format_double(double x) {
    // integers in a plain-notation-friendly range print without an exponent
    if (x == std::floor(x) && std::abs(x) < 1e15) {
        char cand[40];
        std::snprintf(cand, sizeof(cand), "%.0f", x);
        if (std::stod(cand) == x) return cand;
    }
    for (int prec = 1; prec <= 16; ++prec) {
        char cand[40];
        std::snprintf(cand, sizeof(cand), "%.*g", prec, x);
        if (std::stod(cand) == x) return cand;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string sweep_csv(const SweepResult& s) {
    std::ostringstream out;
    out << "detuning_mhz,I\n";
    for (size_t i = 0; i < s.grid_mhz.size(); ++i)
        out << format_double(s.grid_mhz[i]) << "," << format_double(s.signal[i]) << "\n";
    return out.str();
}

std::string trajectory_csv(const Trajectory& t) {
    std::ostringstream out;
    out << "time_us,sigma_z,trace_err\n";
    for (size_t i = 0; i < t.times.size(); ++i)
        out << format_double(t.times[i]) << "," << format_double(t.sigma_z[i]) << ","
            << format_double(t.trace_err[i]) << "\n";
    return out.str();
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    out << "delta_mhz,beta_mhz,alpha_true_sq,alpha_est_sq,alpha_ana_sq,eps1,eps2,n_dips,skipped\n";
    for (const auto& r : rows)
        out << format_double(r.delta_mhz) << "," << format_double(r.beta_mhz) << ","
            << format_double(r.alpha_true_sq) << "," << format_double(r.alpha_est_sq) << ","
            << format_double(r.alpha_ana_sq) << "," << format_double(r.eps1) << ","
            << format_double(r.eps2) << "," << r.n_dips << "," << (r.skipped ? 1 : 0) << "\n";
    return out.str();
}

Json config_json(const RunConfig& c) {
    Json j;
    j["delta_mhz"] = c.delta_mhz;
    j["chi_mhz"] = c.chi_mhz;
    j["beta_mhz"] = c.beta_mhz;
    j["g_mhz"] = c.g_mhz;
    j["lambda_p_mhz"] = c.lambda_p_mhz;
    j["gamma1_mhz"] = c.gamma1_mhz;
    j["gamma2_mhz"] = c.gamma2_mhz;
    j["qubit_offset_mhz"] = c.qubit_offset_mhz;
    j["fock_cutoff"] = c.fock_cutoff;
    j["t_final_us"] = c.t_final_us;
    j["jobs"] = c.jobs;
    j["grid_min_mhz"] = c.grid_min_mhz;
    j["grid_max_mhz"] = c.grid_max_mhz;
    j["grid_step_mhz"] = c.grid_step_mhz;
    j["prominence_main"] = c.prominence_main;
    j["prominence_small"] = c.prominence_small;
    j["scan_mode"] = c.scan_mode;
    j["scan_delta_mhz"] = c.scan_delta_mhz;
    j["scan_constraint_mhz"] = c.scan_constraint_mhz;
    j["scan_window_half_mhz"] = c.scan_window_half_mhz;
    j["out_dir"] = c.out_dir;
    return j;
}

Json extrema_json(const std::vector<ExtremumPoint>& extrema, const RunConfig& c) {
    Json j;
    j["config"] = config_json(c);
    Json list = Json::array();
    for (const auto& e : extrema) {
        Json item;
        item["freq_mhz"] = e.freq_mhz;
        item["value"] = e.value;
        item["kind"] = (e.kind == ExtremumKind::Dip) ? "dip" : "peak";
        item["prominence"] = e.prominence;
        list.push_back(item);
    }
    j["extrema"] = list;
    return j;
}

Json estimation_json(const EstimationReport& r, const RunConfig& c) {
    Json j;
    j["config"] = config_json(c);
    j["dip_low_mhz"] = r.dip_low_mhz;
    j["dip_high_mhz"] = r.dip_high_mhz;
    j["splitting_mhz"] = r.splitting_mhz;
    j["peak_mhz"] = r.peak_mhz;
    j["g_mhz"] = r.g_mhz;
    j["alpha_est_sq"] = r.alpha_est_sq;
    j["alpha_ana_sq"] = r.alpha_ana_sq;
    j["alpha_true_sq"] = r.alpha_true_sq;
    j["eps1"] = r.eps1;
    j["eps2"] = r.eps2;
    return j;
}

Json scan_json(const std::vector<ScanRow>& rows, const RunConfig& c) {
    Json j;
    j["config"] = config_json(c);
    Json list = Json::array();
    for (const auto& r : rows) {
        Json item;
        item["delta_mhz"] = r.delta_mhz;
        item["beta_mhz"] = r.beta_mhz;
        item["alpha_true_sq"] = r.alpha_true_sq;
        item["alpha_est_sq"] = r.alpha_est_sq;
        item["alpha_ana_sq"] = r.alpha_ana_sq;
        item["eps1"] = r.eps1;
        item["eps2"] = r.eps2;
        item["n_dips"] = r.n_dips;
        item["skipped"] = r.skipped;
        list.push_back(item);
    }
    j["rows"] = list;
    return j;
}

Json eigen_json(const SpectrumTable& s, const std::vector<Transition>& transitions,
                const RunConfig& c) {
    Json j;
    j["config"] = config_json(c);
    j["eigenvalues_mhz"] = s.eigenvalues_mhz;
    j["labels"] = s.labels;
    j["overlaps"] = s.overlaps;
    Json list = Json::array();
    for (const auto& t : transitions) {
        Json item;
        item["i"] = t.i;
        item["j"] = t.j;
        item["gap_mhz"] = t.gap_mhz;
        list.push_back(item);
    }
    j["transitions"] = list;
    return j;
}

Json resonances_json(const std::vector<Resonance>& rs, double alpha, const RunConfig& c) {
    Json j;
    j["config"] = config_json(c);
    j["alpha"] = alpha;
    Json list = Json::array();
    for (const auto& r : rs) {
        Json item;
        item["freq_mhz"] = r.freq_mhz;
        item["order"] = r.order;
        item["origin"] = r.origin;
        list.push_back(item);
    }
    j["resonances"] = list;
    return j;
}

Json steady_json(double photon_number, const ConvergenceReport& conv, const BifurcationCheck& bif,
                 const RunConfig& c) {
    Json j;
    j["config"] = config_json(c);
    j["photon_number"] = photon_number;
    j["convergence"] = {{"fock_cutoff", conv.fock_cutoff},
                        {"photon_number", conv.photon_number},
                        {"photon_number_refined", conv.photon_number_refined},
                        {"difference", conv.difference},
                        {"passed", conv.passed}};
    j["bifurcation"] = {{"passed", bif.passed},
                        {"above_threshold", bif.above_threshold},
                        {"best_alpha", bif.best_alpha},
                        {"best_overlap", bif.best_overlap}};
    return j;
}

void write_file(const std::string& path, const std::string& text) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out) throw Error("failed writing output file: " + path);
}

}  // namespace kposim
