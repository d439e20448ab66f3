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

// Ornstein-Uhlenbeck dephasing field on the electron,
//   H_bath = B(t) sz/2 (x) I,
// with B(t) in rad/s. The stationary standard deviation equals b, so the
// quasi-static free-induction envelope is exp(-b^2 t^2 / 2) = exp(-(t/T2*)^2)
// with T2* = sqrt(2)/b, and the slow-bath Hahn echo decays as
// exp(-b^2 t^3 / (12 tau_c)) = exp(-(t/T2)^3).

#pragma once

#include "hfcluster/parallel.hpp"
#include "hfcluster/quantum_core.hpp"
#include "hfcluster/spin_hamiltonian.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace hfcluster {

struct OUNoise {
  double b_rad_s = 0;     // strength; also the stationary standard deviation
  double tau_c_s = 1e-3;  // correlation time
  double dt_s = 0;        // integration step; 0 selects tau_c/50
  uint64_t seed = 1;

  double sigma_stationary() const { return b_rad_s; }
  double step() const { return dt_s > 0 ? dt_s : tau_c_s / 50; }
  double t2_star() const { return std::sqrt(2.0) / b_rad_s; }
  double t2_hahn() const { return std::cbrt(12.0 * tau_c_s / (b_rad_s * b_rad_s)); }

  void validate() const {
    if (!(b_rad_s >= 0)) throw std::invalid_argument("noise strength must be non-negative");
    if (!(tau_c_s > 0)) throw std::invalid_argument("correlation time must be positive");
    if (step() > tau_c_s / 10 * (1 + 1e-12)) throw std::invalid_argument("integration step must be at most tau_c/10");
  }

  /// Copy with dt = min(tau_c/50, shortest_segment/20).
  OUNoise with_default_step(double shortest_segment_s) const {
    OUNoise n = *this;
    n.dt_s = std::min(tau_c_s / 50, shortest_segment_s / 20);
    return n;
  }
};

/// Calibrates (b, tau_c) from the inhomogeneous and Hahn-echo coherence times.
inline OUNoise ou_from_coherence(double t2_star, double t2_hahn, uint64_t seed = 1, double dt = 0) {
  if (!(t2_star > 0)) throw std::invalid_argument("T2* must be positive");
  if (!(t2_hahn > t2_star)) throw std::invalid_argument("T2 must exceed T2*");
  OUNoise n;
  n.b_rad_s = std::sqrt(2.0) / t2_star;
  n.tau_c_s = t2_hahn * t2_hahn * t2_hahn * n.b_rad_s * n.b_rad_s / 12.0;
  n.dt_s = dt;
  n.seed = seed;
  n.validate();
  return n;
}

/// Piecewise-constant sample path B(t) on [0, duration]; sample k holds on
/// [k dt, (k+1) dt).
class NoiseTrajectory {
 public:
  NoiseTrajectory() = default;
  NoiseTrajectory(double dt, std::vector<double> samples) : dt_(dt), samples_(std::move(samples)) {
    prefix_.resize(samples_.size() + 1);
    prefix_[0] = 0;
    for (size_t k = 0; k < samples_.size(); ++k) prefix_[k + 1] = prefix_[k] + samples_[k] * dt_;
  }

  double dt() const { return dt_; }
  double duration() const { return dt_ * static_cast<double>(samples_.size()); }
  const std::vector<double>& samples() const { return samples_; }

  double value_at(double t) const {
    if (samples_.empty()) return 0;
    const auto k = std::min(samples_.size() - 1, static_cast<size_t>(std::max(0.0, t / dt_)));
    return samples_[k];
  }

  /// Exact integral of the piecewise-constant path over [t0, t1].
  double integrate(double t0, double t1) const { return antiderivative(t1) - antiderivative(t0); }

  void require_covers(double t_end) const {
    if (t_end > duration() * (1 + 1e-12) + 1e-18) throw std::out_of_range("noise trajectory shorter than requested segment");
  }

 private:
  double antiderivative(double t) const {
    if (samples_.empty() || t <= 0) return 0;
    const double x = t / dt_;
    auto k = static_cast<size_t>(x);
    if (k >= samples_.size()) return prefix_.back() + (t - duration()) * samples_.back();
    return prefix_[k] + (t - static_cast<double>(k) * dt_) * samples_[k];
  }

  double dt_ = 1;
  std::vector<double> samples_;
  std::vector<double> prefix_;
};

/// Exact OU update from the stationary distribution. `stream` selects an
/// independent RNG stream derived from the noise seed.
inline NoiseTrajectory sample_trajectory(const OUNoise& noise, double duration, uint64_t stream = 0) {
  noise.validate();
  if (!(duration > 0)) throw std::invalid_argument("trajectory duration must be positive");
  const double dt = noise.step();
  const auto count = static_cast<size_t>(std::ceil(duration / dt * (1 - 1e-12))) + 1;
  std::vector<double> s(count, 0.0);
  if (noise.b_rad_s > 0) {
    auto rng = stream_rng(noise.seed, stream);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double sigma = noise.sigma_stationary();
    const double decay = std::exp(-dt / noise.tau_c_s);
    const double kick = sigma * std::sqrt(1 - decay * decay);
    s[0] = sigma * normal(rng);
    for (size_t k = 1; k < count; ++k) s[k] = s[k - 1] * decay + kick * normal(rng);
  }
  return NoiseTrajectory(dt, std::move(s));
}

namespace detail {

/// Electron sz/2 on a register whose first factor is the electron.
inline Eigen::VectorXd electron_half_z(Eigen::Index dim) {
  Eigen::VectorXd d(dim);
  for (Eigen::Index i = 0; i < dim; ++i) d(i) = i < dim / 2 ? 0.5 : -0.5;
  return d;
}

inline bool commutes_with_electron_z(const CMatrix& h) {
  const Eigen::Index half = h.rows() / 2;
  return h.topRightCorner(half, half).norm() <= 1e-12 * std::max(1.0, h.norm()) &&
         h.bottomLeftCorner(half, half).norm() <= 1e-12 * std::max(1.0, h.norm());
}

}  // namespace detail

/// Propagator over [t0, t0 + t] for H (Hz) plus the bath term, acting on an
/// electron-first operator space. Piecewise constant per noise step; when H
/// commutes with the bath term the product collapses to a single phase,
/// which is the same operator.
inline CMatrix noisy_propagator(const CMatrix& h_hz, const NoiseTrajectory& traj, double t0, double t) {
  if (t < 0) throw std::invalid_argument("negative evolution time");
  traj.require_covers(t0 + t);
  const Eigen::VectorXd hz = detail::electron_half_z(h_hz.rows());
  if (detail::commutes_with_electron_z(h_hz)) {
    const double phi = traj.integrate(t0, t0 + t);
    CVector ph(h_hz.rows());
    for (Eigen::Index i = 0; i < ph.size(); ++i) ph(i) = std::polar(1.0, -phi * hz(i));
    return ph.asDiagonal() * propagator(h_hz, t);
  }
  CMatrix u = CMatrix::Identity(h_hz.rows(), h_hz.cols());
  const double dt = traj.dt();
  double now = t0;
  const double end = t0 + t;
  while (now < end - 1e-18) {
    const double next_grid = (std::floor(now / dt + 1e-9) + 1) * dt;
    const double stop = std::min(end, next_grid);
    const double b = traj.value_at(now + 0.5 * (stop - now));
    CMatrix h = h_hz;
    for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, i) += b * hz(i) / kTwoPi;
    u = propagator(h, stop - now) * u;
    now = stop;
  }
  return u;
}

/// Evolves `targets` (electron first) under H + B(t) sz/2 for t seconds starting at t0.
inline PureState apply_noise_segment(const PureState& state, const NoiseTrajectory& traj, double t0, const CMatrix& h_hz,
                                     double t, std::span<const int> targets) {
  return apply_gate(state, Unitary(noisy_propagator(h_hz, traj, t0, t)), targets);
}

// ---------------------------------------------------------------------------
// Coherence experiments on a bare electron
// ---------------------------------------------------------------------------

struct CoherenceCurve {
  std::vector<double> times;
  std::vector<double> signal;  // trajectory-averaged <sx>
};

enum class CoherenceExperiment { FreeInduction, HahnEcho };

/// <sx> of an electron prepared in |+>, averaged over trajectories. For the
/// echo, `times` are total durations 2 tau of tau - pi - tau.
inline CoherenceCurve simulate_coherence(const OUNoise& noise, const std::vector<double>& times, int trajectories,
                                         CoherenceExperiment kind, int workers = 1) {
  if (times.empty()) throw std::invalid_argument("no sample times");
  const double t_max = *std::max_element(times.begin(), times.end());
  const CMatrix h0 = CMatrix::Zero(2, 2);
  const Register reg = Register::spins(0);
  const PureState plus = apply_gate(PureState::all(reg, 0), gates::Ry(kPi / 2), {0});
  const CMatrix pi_pulse = gates::rotation('x', kPi);
  const CMatrix sx = gates::pauli_x();

  std::vector<std::vector<double>> per(static_cast<size_t>(trajectories));
  parallel_for(static_cast<size_t>(trajectories), workers, [&](size_t j) {
    const auto traj = sample_trajectory(noise, t_max, j);
    auto& row = per[j];
    row.resize(times.size());
    for (size_t i = 0; i < times.size(); ++i) {
      const double t = times[i];
      CMatrix u;
      if (kind == CoherenceExperiment::FreeInduction) {
        u = noisy_propagator(h0, traj, 0, t);
      } else {
        u = noisy_propagator(h0, traj, t / 2, t / 2) * pi_pulse * noisy_propagator(h0, traj, 0, t / 2);
      }
      const CVector psi = u * plus.amplitudes();
      row[i] = psi.dot(sx * psi).real();
    }
  });
  CoherenceCurve c{times, std::vector<double>(times.size(), 0.0)};
  for (const auto& row : per)
    for (size_t i = 0; i < times.size(); ++i) c.signal[i] += row[i];
  for (double& s : c.signal) s /= trajectories;
  return c;
}

/// Fits s(t) = exp(-(t/T)^p) by least squares of -ln s against t^p through
/// the origin, using points with s in [floor, 0.98].
inline double fit_decay_time(const CoherenceCurve& c, double power, double floor = 0.15) {
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < c.times.size(); ++i) {
    const double s = c.signal[i];
    if (s < floor || s > 0.98) continue;
    const double x = std::pow(c.times[i], power);
    const double y = -std::log(s);
    sxy += x * y;
    sxx += x * x;
  }
  if (sxx == 0 || sxy <= 0) throw std::runtime_error("no usable points for decay fit");
  return std::pow(sxx / sxy, 1.0 / power);
}

}  // namespace hfcluster
