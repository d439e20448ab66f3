// Copyright 2026 The hfcluster Authors
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

// Electron / intrinsic-nucleus Hamiltonian of a negatively charged group-IV
// vacancy in the microwave rotating frame.
//
// Units: every Hamiltonian here is in ordinary frequency (Hz). The 2*pi is
// inserted only inside the propagator, exp(-i 2 pi H t). Precession vectors
// are reported in rad/s. Operator ordering is electron (x) nucleus.

#pragma once

#include "hfcluster/quantum_core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace hfcluster {

using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

struct SpinSystemParams {
  double a_par_hz = 70e6;
  double a_perp_hz = 70e6;
  double gamma_e_hz_per_t = 14e9;
  double gamma_n_hz_per_t = -8.465e6;  // 29Si
  Vec3 b_t{0.6, 0.0, 0.6};             // z along the defect symmetry axis
  double omega_rabi_hz = 0;            // microwave Rabi frequency (real)
  double omega_mw_hz = 0;              // microwave drive frequency; 0 means resonant with gamma_e*Bz
  double lambda_so_hz = 50e9;

  void validate() const {
    if (!(a_par_hz > 0)) throw std::invalid_argument("A_par must be positive");
    if (!std::isfinite(b_t.norm())) throw std::invalid_argument("non-finite magnetic field");
  }

  /// Secular approximation domain: gamma_e * B_perp well below lambda_SO.
  bool secular_valid() const {
    const double b_perp = std::hypot(b_t.x(), b_t.y());
    return gamma_e_hz_per_t * b_perp < 0.1 * lambda_so_hz;
  }

  double electron_splitting_hz() const { return gamma_e_hz_per_t * b_t.z(); }
  double drive_frequency_hz() const { return omega_mw_hz == 0 ? electron_splitting_hz() : omega_mw_hz; }
};

struct RotatingFrameParams {
  double delta_hz = 0;

  static RotatingFrameParams from(const SpinSystemParams& p) { return {p.drive_frequency_hz() - p.electron_splitting_hz()}; }

  /// Throws if delta disagrees with omega - gamma_e Bz by more than 1 Hz.
  void check_consistent(const SpinSystemParams& p) const {
    if (std::abs(delta_hz - from(p).delta_hz) > 1.0) throw std::invalid_argument("detuning inconsistent with drive and field");
  }
};

namespace pauli {
inline Mat2c x() { Mat2c m; m << 0, 1, 1, 0; return m; }
inline Mat2c y() { Mat2c m; m << 0, cplx(0, -1), cplx(0, 1), 0; return m; }
inline Mat2c z() { Mat2c m; m << 1, 0, 0, -1; return m; }
inline Mat2c id() { return Mat2c::Identity(); }
inline Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}
}  // namespace pauli

/// Rotating-frame Hamiltonian (Hz):
///   delta sz/2 (x) I + Omega sx/2 (x) I + A_par sz/2 (x) sz/2 + gamma_n I (x) B.s/2
/// optionally plus the non-secular A_perp (sx/2 sx/2 + sy/2 sy/2).
inline Mat4c rotating_hamiltonian(const SpinSystemParams& p, const RotatingFrameParams& rf, bool include_a_perp = false) {
  p.validate();
  using namespace pauli;
  const Mat2c bs = p.b_t.x() * x() + p.b_t.y() * y() + p.b_t.z() * z();
  Mat4c h = rf.delta_hz * kron(z(), id()) / 2.0 + p.omega_rabi_hz * kron(x(), id()) / 2.0 +
            p.a_par_hz * kron(z(), z()) / 4.0 + p.gamma_n_hz_per_t * kron(id(), bs) / 2.0;
  if (include_a_perp) h += p.a_perp_hz * (kron(x(), x()) + kron(y(), y())) / 4.0;
  return h;
}

/// Secular free-precession Hamiltonian: no drive, zero detuning, no A_perp.
inline Mat4c secular_hamiltonian(const SpinSystemParams& p) {
  SpinSystemParams q = p;
  q.omega_rabi_hz = 0;
  return rotating_hamiltonian(q, RotatingFrameParams{0.0}, false);
}

/// Lab-frame Hamiltonian at time t with the drive written out explicitly
/// (validation only).
inline Mat4c lab_hamiltonian(const SpinSystemParams& p, double t, bool include_a_perp = true) {
  using namespace pauli;
  const Mat2c bs = p.b_t.x() * x() + p.b_t.y() * y() + p.b_t.z() * z();
  Mat4c h = p.electron_splitting_hz() * kron(z(), id()) / 2.0 +
            p.omega_rabi_hz * std::cos(kTwoPi * p.drive_frequency_hz() * t) * kron(x(), id()) / 2.0 +
            p.gamma_n_hz_per_t * kron(id(), bs) / 2.0 + p.a_par_hz * kron(z(), z()) / 4.0;
  if (include_a_perp) h += p.a_perp_hz * (kron(x(), x()) + kron(y(), y())) / 4.0;
  return h;
}

/// exp(-i 2 pi H t) for Hermitian H in Hz.
inline CMatrix propagator(const CMatrix& h_hz, double t) {
  if (t < 0) throw std::invalid_argument("negative evolution time");
  if ((h_hz - h_hz.adjoint()).norm() > 1e-9 * std::max(1.0, h_hz.norm())) throw std::invalid_argument("Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h_hz);
  const Eigen::VectorXd& e = es.eigenvalues();
  CVector ph(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) ph(i) = std::polar(1.0, -kTwoPi * e(i) * t);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

inline Mat4c propagator4(const Mat4c& h_hz, double t) { return propagator(CMatrix(h_hz), t); }

/// Evolves `targets` (electron wire first, then nucleus) of `state` under H for t seconds.
inline PureState evolve(const PureState& state, const CMatrix& h_hz, double t, std::span<const int> targets) {
  return apply_gate(state, Unitary(propagator(h_hz, t)), targets);
}

inline PureState evolve(const PureState& state, const CMatrix& h_hz, double t) {
  std::vector<int> all(static_cast<size_t>(state.qubits()));
  for (int i = 0; i < state.qubits(); ++i) all[static_cast<size_t>(i)] = i;
  if (h_hz.rows() != state.dim()) throw std::invalid_argument("Hamiltonian dimension does not match state");
  return evolve(state, h_hz, t, all);
}

// ---------------------------------------------------------------------------
// Conditional nuclear precession
// ---------------------------------------------------------------------------

struct PrecessionAxes {
  Vec3 omega_plus;   // rad/s, electron in |0> (S = +1/2)
  Vec3 omega_minus;  // rad/s, electron in |1> (S = -1/2)

  double unit_dot() const {
    const double np = omega_plus.norm(), nm = omega_minus.norm();
    if (np == 0 || nm == 0) return 1.0;
    return omega_plus.dot(omega_minus) / (np * nm);
  }
  bool antiparallel_dominated() const { return unit_dot() < 0; }
};

/// Nuclear precession vectors (gamma_n Bx/2, 0, gamma_n Bz/2 +- A_par/4) in
/// rad/s. These are the coefficients of the Pauli vector, so the nucleus
/// turns at 2|omega| about omega-hat.
inline PrecessionAxes precession_axes(const SpinSystemParams& p) {
  p.validate();
  if (p.b_t.y() != 0) throw std::invalid_argument("precession_axes assumes the off-axis field lies along x (By = 0)");
  const double gx = p.gamma_n_hz_per_t * p.b_t.x() / 2;
  const double gz = p.gamma_n_hz_per_t * p.b_t.z() / 2;
  return {kTwoPi * Vec3(gx, 0, gz + p.a_par_hz / 4), kTwoPi * Vec3(gx, 0, gz - p.a_par_hz / 4)};
}

enum class ResonanceKind { Conditional, Unconditional };

/// Interpulse spacing tau (= 2 tau_f) that satisfies
/// (|w+| - |w-|) tau = (2n-1) pi  (conditional) or 2n pi (unconditional).
inline double resonance_spacing(const SpinSystemParams& p, int n, ResonanceKind kind) {
  if (n < 1) throw std::invalid_argument("resonance index must be a positive integer");
  const auto ax = precession_axes(p);
  const double diff = std::abs(ax.omega_plus.norm() - ax.omega_minus.norm());
  if (diff < 1e-9 * std::max(ax.omega_plus.norm(), 1.0)) throw std::domain_error("degenerate precession rates |w+| = |w-|");
  const double m = kind == ResonanceKind::Conditional ? 2.0 * n - 1.0 : 2.0 * n;
  return m * kPi / diff;
}

/// Free-precession time tau_f of a (tau_f - pi - 2 tau_f - pi - tau_f) unit at resonance.
inline double resonance_tau_f(const SpinSystemParams& p, int n, ResonanceKind kind) { return resonance_spacing(p, n, kind) / 2; }

/// Free evolution under the secular Hamiltonian, exploiting its
/// electron-block-diagonal form: U(t) = |0><0| (x) a(t) + |1><1| (x) b(t).
class SecularPropagator {
 public:
  explicit SecularPropagator(const SpinSystemParams& p) {
    const Mat4c h = secular_hamiltonian(p);
    for (int e = 0; e < 2; ++e) {
      Eigen::SelfAdjointEigenSolver<Mat2c> es(h.block<2, 2>(2 * e, 2 * e));
      vecs_[e] = es.eigenvectors();
      vals_[e] = es.eigenvalues();
    }
  }

  /// Nuclear block for electron state e (0 or 1).
  Mat2c block(int e, double t) const {
    const auto& v = vecs_[e];
    Eigen::Vector2cd ph(std::polar(1.0, -kTwoPi * vals_[e](0) * t), std::polar(1.0, -kTwoPi * vals_[e](1) * t));
    return v * ph.asDiagonal() * v.adjoint();
  }

  Mat4c full(double t) const {
    Mat4c u = Mat4c::Zero();
    u.block<2, 2>(0, 0) = block(0, t);
    u.block<2, 2>(2, 2) = block(1, t);
    return u;
  }

 private:
  Mat2c vecs_[2];
  Eigen::Vector2d vals_[2];
};

/// Ideal instantaneous electron Rx(pi) on the electron (x) nucleus pair.
inline Mat4c electron_pi_pulse() {
  return pauli::kron(-cplx(0, 1) * pauli::x(), pauli::id());
}

/// Finite-duration square Rx(pi) pulse under the full rotating-frame
/// Hamiltonian with the configured Rabi frequency (validation only).
inline Mat4c finite_pi_pulse(const SpinSystemParams& p) {
  if (!(p.omega_rabi_hz > 0)) throw std::invalid_argument("finite pulse needs a positive Rabi frequency");
  return propagator4(rotating_hamiltonian(p, RotatingFrameParams::from(p), false), 1.0 / (2.0 * p.omega_rabi_hz));
}

}  // namespace hfcluster
