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

#include "kposim/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace kposim {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Strip a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

double parse_number(const std::string& raw, const std::string& key) {
    try {
        size_t used = 0;
        const double v = std::stod(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for key '" + key + "': " + raw);
    }
}

std::vector<double> parse_array(const std::string& raw, const std::string& key) {
    if (raw.size() < 2 || raw.front() != '[' || raw.back() != ']')
        throw ConfigError("invalid array for key '" + key + "': " + raw);
    std::vector<double> out;
    std::string inner = raw.substr(1, raw.size() - 2);
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_number(item, key));
    }
    return out;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    // prefer the shortest representation that round-trips
    for (int prec = 1; prec <= 16; ++prec) {
        char cand[32];
        std::snprintf(cand, sizeof(cand), "%.*g", prec, x);
        if (std::stod(cand) == x) return cand;
    }
    return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') continue;  // section headers are ignored
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        if (!kv.emplace(key, val).second)
            throw ConfigError("duplicate key '" + key + "' at line " + std::to_string(lineno));
    }

    RunConfig c;
    auto take = [&](const char* key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return "";
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto num = [&](const char* key, double& dst) {
        const std::string v = take(key);
        if (!v.empty()) dst = parse_number(v, key);
    };
    auto integer = [&](const char* key, int& dst) {
        const std::string v = take(key);
        if (!v.empty()) dst = static_cast<int>(parse_number(v, key));
    };
    auto str = [&](const char* key, std::string& dst) {
        std::string v = take(key);
        if (v.empty()) return;
        if (v.size() < 2 || v.front() != '"' || v.back() != '"')
            throw ConfigError("string value for '" + std::string(key) + "' must be double-quoted");
        dst = v.substr(1, v.size() - 2);
    };

    num("delta_mhz", c.delta_mhz);
    num("chi_mhz", c.chi_mhz);
    num("beta_mhz", c.beta_mhz);
    num("g_mhz", c.g_mhz);
    num("lambda_p_mhz", c.lambda_p_mhz);
    num("gamma1_mhz", c.gamma1_mhz);
    num("gamma2_mhz", c.gamma2_mhz);
    num("qubit_offset_mhz", c.qubit_offset_mhz);
    integer("fock_cutoff", c.fock_cutoff);
    num("t_final_us", c.t_final_us);
    integer("jobs", c.jobs);
    num("grid_min_mhz", c.grid_min_mhz);
    num("grid_max_mhz", c.grid_max_mhz);
    num("grid_step_mhz", c.grid_step_mhz);
    num("prominence_main", c.prominence_main);
    num("prominence_small", c.prominence_small);
    str("scan_mode", c.scan_mode);
    {
        const std::string v = take("scan_delta_mhz");
        if (!v.empty()) c.scan_delta_mhz = parse_array(v, "scan_delta_mhz");
    }
    num("scan_constraint_mhz", c.scan_constraint_mhz);
    num("scan_window_half_mhz", c.scan_window_half_mhz);
    str("out_dir", c.out_dir);

    if (!kv.empty()) throw ConfigError("unknown config key '" + kv.begin()->first + "'");
    c.validate();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void RunConfig::validate() const {
    if (chi_mhz <= 0) throw ConfigError("chi_mhz must be > 0");
    if (gamma1_mhz < 0 || gamma2_mhz < 0) throw ConfigError("decay rates must be >= 0");
    if (beta_mhz < 0) throw ConfigError("beta_mhz must be >= 0");
    if (fock_cutoff < 2) throw ConfigError("fock_cutoff must be >= 2");
    if (grid_step_mhz <= 0) throw ConfigError("grid_step_mhz must be > 0");
    if (grid_max_mhz <= grid_min_mhz) throw ConfigError("grid_max_mhz must exceed grid_min_mhz");
    if (t_final_us <= 0) throw ConfigError("t_final_us must be > 0");
    if (prominence_main <= 0 || prominence_small <= 0)
        throw ConfigError("prominence tiers must be > 0");
    if (scan_mode != "fixed_beta" && scan_mode != "constrained")
        throw ConfigError("scan_mode must be \"fixed_beta\" or \"constrained\"");
    if (scan_delta_mhz.empty()) throw ConfigError("scan_delta_mhz must be non-empty");
    if (jobs < 0) throw ConfigError("jobs must be >= 0");
}

SystemParams RunConfig::system_params() const {
    return SystemParams::from_mhz(delta_mhz, chi_mhz, beta_mhz, g_mhz, lambda_p_mhz,
                                  /*delta_q_mhz=*/0.0, gamma1_mhz, gamma2_mhz, qubit_offset_mhz);
}

std::string RunConfig::serialize() const {
    std::ostringstream out;
    out << "delta_mhz = " << fmt(delta_mhz) << "\n"
        << "chi_mhz = " << fmt(chi_mhz) << "\n"
        << "beta_mhz = " << fmt(beta_mhz) << "\n"
        << "g_mhz = " << fmt(g_mhz) << "\n"
        << "lambda_p_mhz = " << fmt(lambda_p_mhz) << "\n"
        << "gamma1_mhz = " << fmt(gamma1_mhz) << "\n"
        << "gamma2_mhz = " << fmt(gamma2_mhz) << "\n"
        << "qubit_offset_mhz = " << fmt(qubit_offset_mhz) << "\n"
        << "fock_cutoff = " << fock_cutoff << "\n"
        << "t_final_us = " << fmt(t_final_us) << "\n"
        << "jobs = " << jobs << "\n"
        << "grid_min_mhz = " << fmt(grid_min_mhz) << "\n"
        << "grid_max_mhz = " << fmt(grid_max_mhz) << "\n"
        << "grid_step_mhz = " << fmt(grid_step_mhz) << "\n"
        << "prominence_main = " << fmt(prominence_main) << "\n"
        << "prominence_small = " << fmt(prominence_small) << "\n"
        << "scan_mode = \"" << scan_mode << "\"\n";
    out << "scan_delta_mhz = [";
    for (size_t i = 0; i < scan_delta_mhz.size(); ++i)
        out << (i ? ", " : "") << fmt(scan_delta_mhz[i]);
    out << "]\n";
    out << "scan_constraint_mhz = " << fmt(scan_constraint_mhz) << "\n"
        << "scan_window_half_mhz = " << fmt(scan_window_half_mhz) << "\n"
        << "out_dir = \"" << out_dir << "\"\n";
    return out.str();
}

}  // namespace kposim
