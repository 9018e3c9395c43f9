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

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "kposim/model.hpp"

namespace kposim {

/// Vectorized GKSL generator acting on column-stacked density matrices.
struct Liouvillian {
    Matrix mat;  // dim^2 x dim^2
    Eigen::Index state_dim = 0;

    Matrix apply(const Matrix& rho) const;
};

/// Build L[rho] = -i[H, rho] + sum_k (gamma_k/2)(2 c rho c^dag - {c^dag c, rho}).
Liouvillian liouvillian(const Operator& h, const std::vector<std::pair<Operator, double>>& dissipators);

/// GKSL dissipators of the model: (a, gamma1) and (sigma_-, gamma2) on the composite space.
std::vector<std::pair<Operator, double>> model_dissipators(const SystemParams& p, const HilbertSpec& space);

struct SteadyStateResult {
    DensityMatrix rho;
    double residual = 0.0;            // ||L[rho]||_F
    double smallest_singular = 0.0;
    double next_singular = 0.0;
};

/// Null-space steady state via SVD of the vectorized Liouvillian.
/// Requires lambda_p = 0 and at least one nonzero rate.
SteadyStateResult steady_state(const SystemParams& p, const HilbertSpec& space);
SteadyStateResult steady_state(const Liouvillian& l);

struct IntegratorControls {
    double rtol = 1e-8;
    double atol = 1e-10;
    double sample_dt = 0.0;           // 0 -> auto: min(1 ns, 1/(20 f_max))
    double h_init = 1e-4;
    double h_min = 1e-9;
    bool store_states = false;        // keep full snapshots at snapshot_times
    std::vector<double> snapshot_times;
};

struct Trajectory {
    std::vector<double> times;        // us, uniform sampling grid starting at 0
    std::vector<double> sigma_z;      // <sigma_z>(t)
    std::vector<double> trace_err;    // |Tr rho - 1| at sample times
    std::map<double, DensityMatrix> snapshots;
    SystemParams params;
    long n_steps = 0;
    long n_rejected = 0;
};

/// Integrate the GKSL master equation from rho0 to t_final.
///
/// The stiff static part (Hamiltonian + damping anticommutators) is removed
/// exactly with a step-local integrating factor in the eigenbasis of
/// K = -iH_s - (gamma1/2) a^dag a - (gamma2/2) sigma_+ sigma_-, and the
/// remaining bounded terms (jump sandwiches + qubit drive) are advanced with
/// an embedded adaptive Dormand-Prince 5(4) pair.
Trajectory evolve(const DensityMatrix& rho0, const SystemParams& p, const HilbertSpec& space,
                  double t_final_us, const IntegratorControls& controls = {});

/// Time-averaged qubit excitation (1/t) Int (<sigma_z>+1)/2 dtau by trapezoid.
double time_integrated_excitation(const Trajectory& traj);

Complex expectation(const DensityMatrix& rho, const Operator& obs);

struct ConvergenceReport {
    int fock_cutoff = 0;
    double photon_number = 0.0;
    double photon_number_refined = 0.0;  // at fock_cutoff + 5
    double difference = 0.0;
    bool passed = false;
};

/// Compare steady-state <a^dag a> at fock_cutoff and fock_cutoff + 5.
ConvergenceReport convergence_check(const SystemParams& p, const HilbertSpec& space, double tol = 1e-3);

/// Precomputed eigenbasis workspace for evolve(); independent of delta_q and
/// lambda_p, so one instance serves a whole spectroscopy sweep.
class EvolveWorkspace {
  public:
    EvolveWorkspace(const SystemParams& p, const HilbertSpec& space);
    ~EvolveWorkspace();
    EvolveWorkspace(EvolveWorkspace&&) noexcept;

    Trajectory evolve(const DensityMatrix& rho0, const SystemParams& p, double t_final_us,
                      const IntegratorControls& controls = {}) const;

    struct Impl;

  private:
    std::unique_ptr<Impl> impl_;
};

/// Reusable spectroscopy engine: everything that does not depend on delta_q
/// (steady state, K eigenbasis, transformed operators) is computed once.
class MasterEquationEngine {
  public:
    MasterEquationEngine(const SystemParams& p, const HilbertSpec& space);

    const DensityMatrix& initial_steady_state() const { return rho_ss_; }

    /// Trajectory at drive detuning delta_q (rad/us), drive amplitude from params.
    Trajectory run(double delta_q_rad_us, double t_final_us, const IntegratorControls& c = {}) const;
    /// Convenience: time-integrated excitation at a detuning.
    double signal(double delta_q_rad_us, double t_final_us, const IntegratorControls& c = {}) const;

  private:
    SystemParams params_;
    HilbertSpec space_;
    DensityMatrix rho_ss_;
    EvolveWorkspace workspace_;
};

}  // namespace kposim
