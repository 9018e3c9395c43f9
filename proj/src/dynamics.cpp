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

#include "kposim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace kposim {

namespace {
constexpr Complex kI{0.0, 1.0};

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return m;
}
}  // namespace

Matrix Liouvillian::apply(const Matrix& rho) const {
    const Eigen::Index d = state_dim;
    Eigen::Map<const Vector> v(rho.data(), d * d);
    Vector w = mat * v;
    return Eigen::Map<const Matrix>(w.data(), d, d);
}

Liouvillian liouvillian(const Operator& h, const std::vector<std::pair<Operator, double>>& dissipators) {
    const Eigen::Index d = h.dim();
    if (!is_hermitian(h.mat, 1e-9 * std::max(1.0, h.mat.cwiseAbs().maxCoeff())))
        throw Error("liouvillian: Hamiltonian must be Hermitian");
    const Matrix id = Matrix::Identity(d, d);
    // column stacking: vec(A X B) = (B^T (x) A) vec(X)
    Matrix l = -kI * (kron(id, h.mat) - kron(h.mat.transpose(), id));
    for (const auto& [c, rate] : dissipators) {
        if (rate < 0) throw Error("liouvillian: dissipator rate must be >= 0");
        if (c.dim() != d) throw DimensionMismatch("liouvillian: dissipator dimension");
        const Matrix cd_c = c.mat.adjoint() * c.mat;
        l += (rate / 2.0) *
             (2.0 * kron(c.mat.conjugate(), c.mat) - kron(id, cd_c) - kron(cd_c.transpose(), id));
    }
    return {std::move(l), d};
}

std::vector<std::pair<Operator, double>> model_dissipators(const SystemParams& p, const HilbertSpec& space) {
    std::vector<std::pair<Operator, double>> out;
    out.emplace_back(embed_kpo(annihilation(space), space), p.gamma1);
    out.emplace_back(embed_qubit(pauli(Pauli::Minus), space), p.gamma2);
    return out;
}

SteadyStateResult steady_state(const Liouvillian& l) {
    const Eigen::Index d = l.state_dim;
    Eigen::BDCSVD<Matrix> svd(l.mat, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double s_min = sv(sv.size() - 1);
    const double s_next = sv(sv.size() - 2);
    const double scale = sv(0);
    if (s_next < 1e-8 * scale)
        throw DegenerateSteadyState("Liouvillian null space dimension > 1 (s_next = " +
                                    std::to_string(s_next) + ")");
    Vector v = svd.matrixV().col(sv.size() - 1);
    Matrix rho = Eigen::Map<const Matrix>(v.data(), d, d);
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    rho /= rho.trace();
    const double residual = l.apply(rho).norm();
    return {DensityMatrix{std::move(rho)}, residual, s_min, s_next};
}

SteadyStateResult steady_state(const SystemParams& p, const HilbertSpec& space) {
    if (p.lambda_p != 0.0)
        throw Error("steady_state requires lambda_p = 0 (time-independent generator)");
    if (p.gamma1 == 0.0 && p.gamma2 == 0.0)
        throw DegenerateSteadyState("no dissipation: steady state is not unique");
    return steady_state(liouvillian(build_static(p, space), model_dissipators(p, space)));
}

// ---------------------------------------------------------------------------
// Adaptive integrating-factor Dormand-Prince 5(4)
// ---------------------------------------------------------------------------

struct EvolveWorkspace::Impl {
    Eigen::Index d = 0;
    Vector lam;     // eigenvalues of K
    Matrix v, vi;   // K = v diag(lam) v^-1
    // operators conjugated into the K eigenbasis
    Matrix a_t, sm_t, sp_t;      // Vi X V
    Matrix a_tH, sm_tH;          // adjoints, cached
    Matrix sp_r, sm_r;           // right multipliers V^H X V^-H for the drive
    Matrix sz_e, tr_e, n_e;      // observables: Tr[X rho] = Tr[(V^H X V) re]
    double gamma1 = 0.0, gamma2 = 0.0;

    Impl(const SystemParams& p, const HilbertSpec& space) {
        d = space.total_dim();
        const Matrix h_s = build_static(p, space).mat;
        const Matrix a = embed_kpo(annihilation(space), space).mat;
        const Matrix sm = embed_qubit(pauli(Pauli::Minus), space).mat;
        const Matrix sp = embed_qubit(pauli(Pauli::Plus), space).mat;
        const Matrix sz = embed_qubit(pauli(Pauli::Z), space).mat;
        gamma1 = p.gamma1;
        gamma2 = p.gamma2;

        Matrix k = -kI * h_s - (p.gamma1 / 2.0) * (a.adjoint() * a) - (p.gamma2 / 2.0) * (sp * sm);
        Eigen::ComplexEigenSolver<Matrix> es(k);
        if (es.info() != Eigen::Success) throw Error("eigendecomposition of the damped generator failed");
        lam = es.eigenvalues();
        v = es.eigenvectors();
        vi = v.partialPivLu().inverse();

        a_t = vi * a * v;
        sm_t = vi * sm * v;
        sp_t = vi * sp * v;
        a_tH = a_t.adjoint();
        sm_tH = sm_t.adjoint();
        sp_r = sm_t.adjoint();  // V^H sigma_+ V^-H = (Vi sigma_- V)^H
        sm_r = sp_t.adjoint();
        sz_e = v.adjoint() * sz * v;
        tr_e = v.adjoint() * v;
        n_e = v.adjoint() * (a.adjoint() * a) * v;
    }

    // Physical-frame derivative of the nonstiff part, in the K eigenbasis.
    void deriv(double t, const Matrix& rho_e, double lambda_p, double delta_q, Matrix& out) const {
        out.noalias() = gamma1 * (a_t * rho_e * a_tH);
        out.noalias() += gamma2 * (sm_t * rho_e * sm_tH);
        if (lambda_p != 0.0) {
            const Complex ph = std::exp(Complex(0.0, -delta_q * t));
            const Complex cl = lambda_p * ph, cr = lambda_p * std::conj(ph);
            Matrix hl = cl * sp_t + cr * sm_t;
            Matrix hr = cl * sp_r + cr * sm_r;
            out.noalias() += -kI * (hl * rho_e);
            out.noalias() += kI * (rho_e * hr);
        }
    }

    double trace_of(const Matrix& obs_e, const Matrix& re) const {
        return obs_e.cwiseProduct(re.transpose()).sum().real();
    }

    Matrix to_physical(const Matrix& re) const {
        Matrix rho = v * re * v.adjoint();
        return ((rho + rho.adjoint()) / 2.0).eval();
    }
};

EvolveWorkspace::EvolveWorkspace(const SystemParams& p, const HilbertSpec& space)
    : impl_(std::make_unique<Impl>(p, space)) {}
EvolveWorkspace::~EvolveWorkspace() = default;
EvolveWorkspace::EvolveWorkspace(EvolveWorkspace&&) noexcept = default;

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,       7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

double sample_spacing(const SystemParams& p, const IntegratorControls& c) {
    if (c.sample_dt > 0) return c.sample_dt;
    const double f_max =
        std::max({std::abs(p.delta_q), 2.0 * p.lambda_p, std::abs(p.delta)}) / kTwoPi;  // MHz
    double dt = 1e-3;  // 1 ns
    if (f_max > 0) dt = std::min(dt, 1.0 / (20.0 * f_max));
    return dt;
}

}  // namespace

Trajectory EvolveWorkspace::evolve(const DensityMatrix& rho0, const SystemParams& p,
                                   double t_final_us, const IntegratorControls& c) const {
    const Impl& w = *impl_;
    const Eigen::Index d = w.d;
    if (rho0.dim() != d) throw DimensionMismatch("evolve: initial state dimension");
    if (t_final_us <= 0) throw Error("evolve: t_final must be > 0");

    Trajectory traj;
    traj.params = p;

    const double dt_samp = sample_spacing(p, c);
    std::set<double> events;
    // index-based grid: no accumulation error, no sub-resolution sliver at the end
    for (long i = 0; i * dt_samp < t_final_us + 1e-12; ++i)
        events.insert(std::min(i * dt_samp, t_final_us));
    events.insert(t_final_us);
    std::set<double> snaps(c.snapshot_times.begin(), c.snapshot_times.end());
    if (c.store_states && snaps.empty()) snaps = {0.0, t_final_us};
    for (double t : snaps) {
        if (t < 0 || t > t_final_us + 1e-12) throw Error("evolve: snapshot time outside [0, t_final]");
        events.insert(std::min(t, t_final_us));
    }

    // state in the K eigenbasis at the current anchor time
    Matrix re = w.vi * rho0.mat * w.vi.adjoint();

    auto record = [&](double t) {
        traj.times.push_back(t);
        traj.sigma_z.push_back(w.trace_of(w.sz_e, re));
        traj.trace_err.push_back(std::abs(w.trace_of(w.tr_e, re) - 1.0));
        if (snaps.count(t)) traj.snapshots.emplace(t, DensityMatrix{w.to_physical(re)});
    };

    std::vector<Matrix> k(7, Matrix(d, d));
    Matrix stage(d, d), y5(d, d), err(d, d), rho_stage(d, d);
    Vector u(d), uinv(d);

    double t = 0.0;
    double h = std::min(c.h_init, dt_samp);
    bool have_k1 = false;

    auto it = events.begin();
    record(*it);  // t = 0
    ++it;

    while (it != events.end()) {
        const double t_target = *it;
        // gaps below 1 ps are sampling-grid round-off, not physics: snap to the event
        while (t < t_target - 1e-12) {
            const double rem = t_target - t;
            const bool capped = rem <= h;  // event boundary, not the error controller
            const double h_prop = h;       // controller proposal, restored after a capped step
            h = std::min(h, rem);
            if (h < c.h_min && !capped)
                throw StepSizeUnderflow("step size underflow at t = " + std::to_string(t));

            if (!have_k1) {
                w.deriv(t, re, p.lambda_p, p.delta_q, k[0]);
                have_k1 = true;
            }
            // stages 2..7 with step-local integrating factor
            for (int s = 1; s < 7; ++s) {
                stage = re;
                for (int j = 0; j < s; ++j)
                    if (kA[s][j] != 0.0) stage.noalias() += (h * kA[s][j]) * k[j];
                const double ch = kC[s] * h;
                for (Eigen::Index q = 0; q < d; ++q) u(q) = std::exp(w.lam(q) * ch);
                uinv = u.cwiseInverse();
                rho_stage.noalias() = u.asDiagonal() * stage * u.adjoint().asDiagonal();
                w.deriv(t + ch, rho_stage, p.lambda_p, p.delta_q, k[s]);
                k[s] = uinv.asDiagonal() * k[s] * uinv.adjoint().asDiagonal();
            }
            // stage 7 shares c = 1 and the b5 weights: k[6] evaluated at y5 (FSAL)
            y5 = re;
            err.setZero();
            for (int s = 0; s < 7; ++s) {
                if (kB5[s] != 0.0) y5.noalias() += (h * kB5[s]) * k[s];
                const double db = kB5[s] - kB4[s];
                if (db != 0.0) err.noalias() += (h * db) * k[s];
            }

            // weighted RMS error norm in the transformed frame
            double acc = 0.0;
            for (Eigen::Index col = 0; col < d; ++col)
                for (Eigen::Index row = 0; row < d; ++row) {
                    const double sc =
                        c.atol + c.rtol * std::max(std::abs(re(row, col)), std::abs(y5(row, col)));
                    const double e = std::abs(err(row, col)) / sc;
                    acc += e * e;
                }
            const double err_norm = std::sqrt(acc / static_cast<double>(d * d));

            if (err_norm <= 1.0) {
                for (Eigen::Index q = 0; q < d; ++q) u(q) = std::exp(w.lam(q) * h);
                re.noalias() = u.asDiagonal() * y5 * u.adjoint().asDiagonal();
                // FSAL: k7 was computed in the old anchor frame; rescale to the new one
                k[0] = u.asDiagonal() * k[6] * u.adjoint().asDiagonal();
                t += h;
                ++traj.n_steps;
                const double fac = std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
                h = capped ? h_prop : h * fac;
            } else {
                ++traj.n_rejected;
                have_k1 = true;  // k1 still valid at unchanged (t, re)
                h *= std::clamp(0.9 * std::pow(err_norm, -0.2), 0.1, 0.9);
            }
        }
        t = t_target;
        record(t);
        ++it;
    }
    return traj;
}

Trajectory evolve(const DensityMatrix& rho0, const SystemParams& p, const HilbertSpec& space,
                  double t_final_us, const IntegratorControls& controls) {
    return EvolveWorkspace(p, space).evolve(rho0, p, t_final_us, controls);
}

double time_integrated_excitation(const Trajectory& traj) {
    if (traj.times.size() < 2) throw Error("time_integrated_excitation: need at least 2 samples");
    double acc = 0.0;
    for (size_t i = 1; i < traj.times.size(); ++i) {
        const double dt = traj.times[i] - traj.times[i - 1];
        const double f0 = (traj.sigma_z[i - 1] + 1.0) / 2.0;
        const double f1 = (traj.sigma_z[i] + 1.0) / 2.0;
        acc += 0.5 * (f0 + f1) * dt;
    }
    return acc / (traj.times.back() - traj.times.front());
}

Complex expectation(const DensityMatrix& rho, const Operator& obs) {
    if (rho.dim() != obs.dim()) throw DimensionMismatch("expectation: dimensions differ");
    return (obs.mat * rho.mat).trace();
}

ConvergenceReport convergence_check(const SystemParams& p, const HilbertSpec& space, double tol) {
    ConvergenceReport r;
    r.fock_cutoff = space.fock_cutoff;
    SystemParams q = p.with_lambda_p(0.0);
    {
        auto ss = steady_state(q, space);
        r.photon_number = expectation(ss.rho, embed_kpo(number_op(space), space)).real();
    }
    {
        HilbertSpec bigger(space.fock_cutoff + 5);
        auto ss = steady_state(q, bigger);
        r.photon_number_refined = expectation(ss.rho, embed_kpo(number_op(bigger), bigger)).real();
    }
    r.difference = std::abs(r.photon_number - r.photon_number_refined);
    r.passed = r.difference < tol;
    return r;
}

MasterEquationEngine::MasterEquationEngine(const SystemParams& p, const HilbertSpec& space)
    : params_(p), space_(space), rho_ss_(), workspace_(p, space) {
    rho_ss_ = steady_state(p.with_lambda_p(0.0), space).rho;
}

Trajectory MasterEquationEngine::run(double delta_q_rad_us, double t_final_us,
                                     const IntegratorControls& c) const {
    return workspace_.evolve(rho_ss_, params_.with_delta_q(delta_q_rad_us), t_final_us, c);
}

double MasterEquationEngine::signal(double delta_q_rad_us, double t_final_us,
                                    const IntegratorControls& c) const {
    return time_integrated_excitation(run(delta_q_rad_us, t_final_us, c));
}

}  // namespace kposim
