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

#include "kposim/eigenanalysis.hpp"

#include <algorithm>
#include <cmath>

namespace kposim {

SpectrumTable spectrum(const SystemParams& p, const HilbertSpec& space) {
    const Operator h = build_static(p, space);
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.mat);
    if (es.info() != Eigen::Success) throw Error("spectrum: eigendecomposition failed");

    SpectrumTable s;
    const int d = space.total_dim();
    s.eigenvalues_mhz.resize(d);
    s.eigenvectors.resize(d);
    for (int k = 0; k < d; ++k) {
        // descending order: level 0 = top of the rotating-frame spectrum
        const int src = d - 1 - k;
        s.eigenvalues_mhz[k] = es.eigenvalues()(src) / kTwoPi;
        s.eigenvectors[k] = Ket{es.eigenvectors().col(src)};
    }
    return s;
}

std::vector<Transition> transition_table(const SpectrumTable& s, int max_level) {
    if (max_level < 1 || max_level >= static_cast<int>(s.eigenvalues_mhz.size()))
        throw Error("transition_table: max_level out of range");
    std::vector<Transition> out;
    for (int i = 0; i < max_level; ++i)
        for (int j = i + 1; j <= max_level; ++j)
            out.push_back({i, j, s.eigenvalues_mhz[i] - s.eigenvalues_mhz[j]});
    std::sort(out.begin(), out.end(),
              [](const Transition& a, const Transition& b) { return a.gap_mhz < b.gap_mhz; });
    return out;
}

StateMatch identify_state(const Ket& v, double alpha, const HilbertSpec& space) {
    if (v.dim() != space.total_dim()) throw DimensionMismatch("identify_state: state dimension");

    const Matrix dp = displacement(alpha, space).mat;  // D_{+alpha}; D_{-alpha} = dp^dag
    Vector qplus(2), qminus(2);
    qplus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);    // (|e> + |g>)/sqrt(2)
    qminus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);  // (|e> - |g>)/sqrt(2)

    auto kron_vec = [](const Vector& f, const Vector& q) {
        Vector out(f.size() * 2);
        for (Eigen::Index i = 0; i < f.size(); ++i) out.segment(2 * i, 2) = f(i) * q;
        return out;
    };

    StateMatch best;
    const int n_max = std::min(4, space.fock_cutoff / 2);
    for (int n = 0; n < n_max; ++n) {
        const Vector fn = fock_state(n, space).amp;
        const Vector dpf = dp * fn;          // D_{+alpha}|n>
        const Vector dmf = dp.adjoint() * fn;  // D_{-alpha}|n>
        for (int q1 = 0; q1 < 2; ++q1) {
            for (int q2 = 0; q2 < 2; ++q2) {
                for (int sgn = 0; sgn < 2; ++sgn) {
                    const Vector& u1 = q1 ? qminus : qplus;
                    const Vector& u2 = q2 ? qminus : qplus;
                    const double s = sgn ? -1.0 : 1.0;
                    Vector cand = kron_vec(dpf, u1) + s * kron_vec(dmf, u2);
                    const double nrm = cand.norm();
                    if (nrm < 1e-8) continue;
                    cand /= nrm;
                    const double ov = std::norm(cand.dot(v.amp));
                    if (ov > best.overlap) {
                        best.overlap = ov;
                        best.label = std::string("(D+a|") + std::to_string(n) + ">|" +
                                     (q1 ? "-" : "+") + "> " + (sgn ? "-" : "+") + " D-a|" +
                                     std::to_string(n) + ">|" + (q2 ? "-" : "+") + ">)/norm";
                    }
                }
            }
        }
    }
    return best;
}

void label_spectrum(SpectrumTable& s, double alpha, const HilbertSpec& space) {
    s.labels.resize(s.eigenvectors.size());
    s.overlaps.resize(s.eigenvectors.size());
    for (size_t k = 0; k < s.eigenvectors.size(); ++k) {
        const StateMatch m = identify_state(s.eigenvectors[k], alpha, space);
        s.labels[k] = m.label;
        s.overlaps[k] = m.overlap;
    }
}

PopulationSeries eigen_populations(const Trajectory& traj, const SpectrumTable& s,
                                   const std::vector<int>& levels) {
    if (traj.snapshots.empty()) throw MissingSnapshots("trajectory has no stored snapshots");
    for (int k : levels)
        if (k < 0 || k >= static_cast<int>(s.eigenvectors.size()))
            throw Error("eigen_populations: level index out of range");

    PopulationSeries out;
    for (const auto& [t, rho] : traj.snapshots) {
        out.times_us.push_back(t);
        std::vector<double> row;
        row.reserve(levels.size());
        for (int k : levels) {
            const Vector& v = s.eigenvectors[k].amp;
            row.push_back(std::real(v.dot(rho.mat * v)));
        }
        out.populations.push_back(std::move(row));
    }
    return out;
}

}  // namespace kposim
