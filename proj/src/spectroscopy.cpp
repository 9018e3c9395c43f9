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

#include "kposim/spectroscopy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace kposim {

std::vector<double> GridSpec::points() const {
    if (step_mhz <= 0) throw Error("grid step must be > 0");
    if (max_mhz < min_mhz) throw Error("grid max must be >= min");
    std::vector<double> pts;
    const long n = std::lround((max_mhz - min_mhz) / step_mhz);
    pts.reserve(n + 1);
    for (long k = 0; k <= n; ++k) pts.push_back(min_mhz + k * step_mhz);
    if (pts.back() > max_mhz + 1e-9) pts.pop_back();
    return pts;
}

SweepResult sweep_points(const SystemParams& p, const HilbertSpec& space,
                         const std::vector<double>& grid_mhz, const SweepOptions& options) {
    if (p.lambda_p <= 0) throw Error("sweep requires lambda_p > 0");
    for (size_t i = 1; i < grid_mhz.size(); ++i)
        if (grid_mhz[i] <= grid_mhz[i - 1]) throw Error("sweep grid must be strictly increasing");

    const MasterEquationEngine engine(p, space);

    SweepResult result;
    result.grid_mhz = grid_mhz;
    result.signal.assign(grid_mhz.size(), 0.0);
    result.trace_err.assign(grid_mhz.size(), 0.0);
    result.params = p;
    result.t_final_us = options.t_final_us;

    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mutex;

    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid_mhz.size() || failed.load()) break;
            try {
                Trajectory t = engine.run(kTwoPi * grid_mhz[i], options.t_final_us, options.controls);
                result.signal[i] = time_integrated_excitation(t);
                result.trace_err[i] = *std::max_element(t.trace_err.begin(), t.trace_err.end());
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!failed.exchange(true))
                    first_error = "sweep failed at grid point " + std::to_string(grid_mhz[i]) +
                                  " MHz: " + e.what();
            }
        }
    };

    int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::clamp(jobs, 1, static_cast<int>(grid_mhz.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw Error(first_error);
    return result;
}

SweepResult sweep(const SystemParams& p, const HilbertSpec& space, const GridSpec& grid,
                  const SweepOptions& options) {
    return sweep_points(p, space, grid.points(), options);
}

namespace {

// Topographic prominence of a local maximum of y at index i: height above the
// higher of the two bases, where each base is the minimum between the peak and
// the nearest strictly higher sample on that side (signal edge if none).
double prominence_at(const std::vector<double>& y, size_t i) {
    double left_base = y[i];
    for (size_t k = i; k-- > 0;) {
        left_base = std::min(left_base, y[k]);
        if (y[k] > y[i]) break;
    }
    double right_base = y[i];
    for (size_t k = i + 1; k < y.size(); ++k) {
        right_base = std::min(right_base, y[k]);
        if (y[k] > y[i]) break;
    }
    return y[i] - std::max(left_base, right_base);
}

// Vertex of the parabola through (x0,y0), (x1,y1), (x2,y2) on a uniform grid.
void refine(const std::vector<double>& x, const std::vector<double>& y, size_t i, double& xv,
            double& yv) {
    const double d2 = y[i - 1] - 2.0 * y[i] + y[i + 1];
    if (d2 == 0.0) {
        xv = x[i];
        yv = y[i];
        return;
    }
    const double shift = 0.5 * (y[i - 1] - y[i + 1]) / d2;
    const double h = x[i + 1] - x[i];
    xv = x[i] + shift * h;
    yv = y[i] - 0.25 * (y[i - 1] - y[i + 1]) * shift;
}

}  // namespace

std::vector<ExtremumPoint> find_extrema(const SweepResult& s, double min_prominence) {
    const auto& x = s.grid_mhz;
    const auto& y = s.signal;
    if (x.size() < 5) throw Error("find_extrema requires at least 5 grid points");
    if (min_prominence <= 0) throw Error("min_prominence must be > 0");

    std::vector<double> neg(y.size());
    std::transform(y.begin(), y.end(), neg.begin(), [](double v) { return -v; });

    std::vector<ExtremumPoint> out;
    for (size_t i = 1; i + 1 < y.size(); ++i) {
        const bool peak = y[i] > y[i - 1] && y[i] > y[i + 1];
        const bool dip = y[i] < y[i - 1] && y[i] < y[i + 1];
        if (!peak && !dip) continue;
        const double prom = peak ? prominence_at(y, i) : prominence_at(neg, i);
        if (prom < min_prominence) continue;
        ExtremumPoint e;
        e.kind = peak ? ExtremumKind::Peak : ExtremumKind::Dip;
        e.prominence = prom;
        refine(x, y, i, e.freq_mhz, e.value);
        out.push_back(e);
    }
    if (out.empty()) throw NoExtrema("no extremum with prominence >= " + std::to_string(min_prominence));
    std::sort(out.begin(), out.end(),
              [](const ExtremumPoint& a, const ExtremumPoint& b) { return a.freq_mhz < b.freq_mhz; });
    return out;
}

std::vector<ExtremumPoint> principal_dips(const std::vector<ExtremumPoint>& extrema, int count) {
    std::vector<ExtremumPoint> dips;
    for (const auto& e : extrema)
        if (e.kind == ExtremumKind::Dip) dips.push_back(e);
    std::sort(dips.begin(), dips.end(),
              [](const ExtremumPoint& a, const ExtremumPoint& b) { return a.prominence > b.prominence; });
    if (dips.size() > static_cast<size_t>(count)) dips.resize(count);
    std::sort(dips.begin(), dips.end(),
              [](const ExtremumPoint& a, const ExtremumPoint& b) { return a.freq_mhz < b.freq_mhz; });
    return dips;
}

}  // namespace kposim
