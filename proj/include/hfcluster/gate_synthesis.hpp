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

// Electron-nuclear two-qubit gates built from dynamically decoupled units
//
//   D(tau_f) = F(tau_f) . Pi . F(2 tau_f) . Pi . F(tau_f)
//
// (F free evolution, Pi an ideal instantaneous electron Rx(pi)) with ideal
// electron rotations in between. A sequence with k units is
//
//   U = G_k D(tau_{k-1}) G_{k-1} ... G_1 D(tau_0) G_0
//
// so G_0 acts first. Spacings are found by a multi-start derivative-free
// search: coordinate-wise line scans over a tau grid with golden-section
// refinement, discrete moves on the electron gates, then Nelder-Mead
// polishing of the spacings.

#pragma once

#include "hfcluster/config.hpp"
#include "hfcluster/noise_bath.hpp"
#include "hfcluster/optimize.hpp"
#include "hfcluster/parallel.hpp"
#include "hfcluster/quantum_core.hpp"
#include "hfcluster/spin_hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hfcluster {

// ---------------------------------------------------------------------------
// Electron gate menu
// ---------------------------------------------------------------------------

enum class ElectronGate { I, Rx90, Ry90, Rz90, Rx180 };

inline constexpr std::array<ElectronGate, 5> kElectronGateMenu{ElectronGate::I, ElectronGate::Rx90, ElectronGate::Ry90,
                                                               ElectronGate::Rz90, ElectronGate::Rx180};

inline std::string to_string(ElectronGate g) {
  switch (g) {
    case ElectronGate::I: return "id";
    case ElectronGate::Rx90: return "rx90";
    case ElectronGate::Ry90: return "ry90";
    case ElectronGate::Rz90: return "rz90";
    case ElectronGate::Rx180: return "rx180";
  }
  return "?";
}

inline ElectronGate parse_electron_gate(const std::string& s) {
  for (ElectronGate g : kElectronGateMenu)
    if (to_string(g) == s) return g;
  throw std::invalid_argument("unknown electron gate '" + s + "'");
}

inline Mat2c electron_gate_matrix(ElectronGate g) {
  switch (g) {
    case ElectronGate::I: return Mat2c::Identity();
    case ElectronGate::Rx90: return gates::rotation('x', kPi / 2);
    case ElectronGate::Ry90: return gates::rotation('y', kPi / 2);
    case ElectronGate::Rz90: return gates::rotation('z', kPi / 2);
    case ElectronGate::Rx180: return gates::rotation('x', kPi);
  }
  return Mat2c::Identity();
}

inline Mat4c electron_gate_4(ElectronGate g) { return pauli::kron(electron_gate_matrix(g), pauli::id()); }

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

struct DDSequence {
  std::vector<double> tau_f;                 // seconds, one per unit
  std::vector<ElectronGate> electron_gates;  // k + 1 slots, or empty for the identity

  int k() const { return static_cast<int>(tau_f.size()); }
  bool empty() const { return tau_f.empty() && electron_gates.empty(); }

  /// Sum of 4 tau_f; pi pulses are instantaneous.
  double total_duration() const {
    double s = 0;
    for (double t : tau_f) s += 4 * t;
    return s;
  }

  double shortest_segment() const {
    if (tau_f.empty()) return 0;
    return *std::min_element(tau_f.begin(), tau_f.end());
  }

  void validate() const {
    for (double t : tau_f)
      if (!(t > 0)) throw std::invalid_argument("free-precession times must be positive");
    if (!(electron_gates.empty() && tau_f.empty()) && electron_gates.size() != tau_f.size() + 1)
      throw std::invalid_argument("sequence needs k + 1 electron gate slots");
  }

  ElectronGate gate(size_t slot) const { return electron_gates.empty() ? ElectronGate::I : electron_gates.at(slot); }
};

struct SynthesisReport {
  DDSequence sequence;
  double unitary_fidelity = 0;
  long iterations = 0;
  std::string target_name;
  bool below_threshold = true;
};

/// One decoupling unit under an arbitrary 4x4 Hamiltonian (Hz).
inline Mat4c dd_unit(double tau_f, const Mat4c& h_hz) {
  if (!(tau_f > 0)) throw std::invalid_argument("tau_f must be positive");
  const Mat4c f1 = propagator4(h_hz, tau_f);
  const Mat4c f2 = propagator4(h_hz, 2 * tau_f);
  const Mat4c pi = electron_pi_pulse();
  return f1 * pi * f2 * pi * f1;
}

inline Mat4c sequence_unitary(const DDSequence& seq, const Mat4c& h_hz) {
  seq.validate();
  Mat4c u = electron_gate_4(seq.gate(0));
  for (int j = 0; j < seq.k(); ++j) u = electron_gate_4(seq.gate(static_cast<size_t>(j) + 1)) * dd_unit(seq.tau_f[static_cast<size_t>(j)], h_hz) * u;
  return u;
}

inline Mat4c sequence_unitary(const DDSequence& seq, const SpinSystemParams& p) { return sequence_unitary(seq, secular_hamiltonian(p)); }

/// |Tr(target^dagger u)| / d, insensitive to global phase.
inline double gate_fidelity(const CMatrix& u, const CMatrix& target) {
  if (u.rows() != target.rows() || u.cols() != target.cols()) throw std::invalid_argument("gate dimension mismatch");
  return std::abs((target.adjoint() * u).trace()) / static_cast<double>(u.rows());
}

/// Fast unit evaluation on the secular Hamiltonian: D(tau) = -diag(a b2 a, b a2 b).
class SecularUnit {
 public:
  explicit SecularUnit(const SpinSystemParams& p) : prop_(p) {}

  std::pair<Mat2c, Mat2c> blocks(double tau_f) const {
    const Mat2c a1 = prop_.block(0, tau_f), b1 = prop_.block(1, tau_f);
    const Mat2c a2 = prop_.block(0, 2 * tau_f), b2 = prop_.block(1, 2 * tau_f);
    return {-(a1 * b2 * a1), -(b1 * a2 * b1)};
  }

  Mat4c unit(double tau_f) const {
    const auto [a, b] = blocks(tau_f);
    Mat4c u = Mat4c::Zero();
    u.block<2, 2>(0, 0) = a;
    u.block<2, 2>(2, 2) = b;
    return u;
  }

  const SecularPropagator& propagator() const { return prop_; }

 private:
  SecularPropagator prop_;
};

/// Sequence unitary with the bath switched on: the electron sees B(t) during
/// every free-precession segment, starting at `t_start` on the trajectory.
inline Mat4c noisy_sequence_unitary(const DDSequence& seq, const Mat4c& h_hz, const NoiseTrajectory& traj, double t_start) {
  seq.validate();
  const CMatrix h(h_hz);
  const Mat4c pi = electron_pi_pulse();
  Mat4c u = electron_gate_4(seq.gate(0));
  double t = t_start;
  for (int j = 0; j < seq.k(); ++j) {
    const double tf = seq.tau_f[static_cast<size_t>(j)];
    const Mat4c f1 = noisy_propagator(h, traj, t, tf);
    const Mat4c f2 = noisy_propagator(h, traj, t + tf, 2 * tf);
    const Mat4c f3 = noisy_propagator(h, traj, t + 3 * tf, tf);
    u = electron_gate_4(seq.gate(static_cast<size_t>(j) + 1)) * f3 * pi * f2 * pi * f1 * u;
    t += 4 * tf;
  }
  return u;
}

// ---------------------------------------------------------------------------
// Named targets
// ---------------------------------------------------------------------------

inline std::optional<Mat4c> named_target(const std::string& name) {
  using namespace pauli;
  if (name == "identity") return Mat4c::Identity();
  if (name == "cz") return Mat4c(gates::CZ().matrix());
  if (name == "swap") return Mat4c(gates::SWAP().matrix());
  if (name == "cnot") return Mat4c(gates::CNOT().matrix());
  if (name == "nuc_rx90") return kron(id(), gates::rotation('x', kPi / 2));
  if (name == "nuc_rz90") return kron(id(), gates::rotation('z', kPi / 2));
  if (name == "nuc_rx180") return kron(id(), gates::rotation('x', kPi));
  return std::nullopt;
}

inline const std::vector<std::string>& target_names() {
  static const std::vector<std::string> names{"identity", "cz", "swap", "cnot", "nuc_rx90", "nuc_rz90", "nuc_rx180"};
  return names;
}

// ---------------------------------------------------------------------------
// Synthesis
// ---------------------------------------------------------------------------

struct SynthesisOptions {
  double threshold = 0.999;
  int min_k = 0;
  int max_k = 26;
  int restarts = 48;       // per k
  int polish_top = 4;      // candidates per k that get Nelder-Mead polishing
  int max_sweeps = 120;
  int grid_points = 500;
  double tau_min = 1e-9;
  double tau_max = 0;      // 0: conditional n = 1 resonance tau_f
  uint64_t seed = 2024;
  int workers = 0;         // 0: all cores
};

namespace detail {

struct Candidate {
  std::vector<double> tau;
  std::vector<ElectronGate> gates;
  double fidelity = 0;
  long evals = 0;

  double duration() const {
    double s = 0;
    for (double t : tau) s += 4 * t;
    return s;
  }
};

class SequenceSearch {
 public:
  SequenceSearch(const Mat4c& target, const SpinSystemParams& p, const SynthesisOptions& opt)
      : target_(target), target_adj_(target.adjoint()), unit_(p), opt_(opt) {
    tau_max_ = opt.tau_max > 0 ? opt.tau_max : resonance_tau_f(p, 1, ResonanceKind::Conditional);
    if (!(tau_max_ > opt.tau_min)) throw std::invalid_argument("tau_max must exceed tau_min");
    for (ElectronGate g : kElectronGateMenu) egate_[static_cast<int>(g)] = electron_gate_4(g);
    grid_.resize(static_cast<size_t>(opt.grid_points));
    grid_blocks_.resize(grid_.size());
    for (size_t i = 0; i < grid_.size(); ++i) {
      grid_[i] = opt.tau_min + (tau_max_ - opt.tau_min) * static_cast<double>(i) / static_cast<double>(grid_.size() - 1);
      grid_blocks_[i] = unit_.blocks(grid_[i]);
    }
  }

  double tau_max() const { return tau_max_; }

  double fidelity(const std::vector<double>& tau, const std::vector<ElectronGate>& g) const {
    return gate_fidelity(CMatrix(product(tau, g)), CMatrix(target_));
  }

  Mat4c product(const std::vector<double>& tau, const std::vector<ElectronGate>& g) const {
    Mat4c u = egate_[static_cast<int>(g[0])];
    for (size_t j = 0; j < tau.size(); ++j) u = egate_[static_cast<int>(g[j + 1])] * unit_.unit(tau[j]) * u;
    return u;
  }

  /// Coordinate scans + gate moves from a random start.
  Candidate descend(int k, uint64_t stream) const {
    auto rng = stream_rng(opt_.seed, stream);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(kElectronGateMenu.size()) - 1);
    std::uniform_real_distribution<double> frac(0.05, 1.0);
    Candidate c;
    c.gates.resize(static_cast<size_t>(k) + 1);
    for (auto& g : c.gates) g = kElectronGateMenu[static_cast<size_t>(pick(rng))];
    c.tau.resize(static_cast<size_t>(k));
    for (auto& t : c.tau) t = std::max(opt_.tau_min, frac(rng) * tau_max_);

    const double h = grid_.size() > 1 ? grid_[1] - grid_[0] : tau_max_;
    double best = fidelity(c.tau, c.gates);
    std::vector<Mat4c> units(static_cast<size_t>(k)), suffix(static_cast<size_t>(k));
    for (int sweep = 0; sweep < opt_.max_sweeps; ++sweep) {
      const double before = best;
      if (k > 0) {
        for (int j = 0; j < k; ++j) units[static_cast<size_t>(j)] = unit_.unit(c.tau[static_cast<size_t>(j)]);
        // suffix[j] = G_k D_{k-1} ... G_{j+1}
        suffix[static_cast<size_t>(k - 1)] = egate_[static_cast<int>(c.gates[static_cast<size_t>(k)])];
        for (int j = k - 2; j >= 0; --j)
          suffix[static_cast<size_t>(j)] = suffix[static_cast<size_t>(j + 1)] * units[static_cast<size_t>(j + 1)] *
                                           egate_[static_cast<int>(c.gates[static_cast<size_t>(j + 1)])];
        Mat4c prefix = egate_[static_cast<int>(c.gates[0])];
        for (int j = 0; j < k; ++j) {
          const Mat4c m = prefix * target_adj_ * suffix[static_cast<size_t>(j)];
          const Mat2c m00 = m.block<2, 2>(0, 0), m11 = m.block<2, 2>(2, 2);
          auto score = [&](const std::pair<Mat2c, Mat2c>& d) {
            return std::abs((m00 * d.first).trace() + (m11 * d.second).trace()) / 4.0;
          };
          size_t arg = 0;
          double top = -1;
          for (size_t i = 0; i < grid_.size(); ++i) {
            const double s = score(grid_blocks_[i]);
            if (s > top) {
              top = s;
              arg = i;
            }
          }
          const double lo = std::max(opt_.tau_min, grid_[arg] - h), hi = std::min(tau_max_, grid_[arg] + h);
          const double t = optimize::golden_section([&](double x) { return -score(unit_.blocks(x)); }, lo, hi, 1e-15);
          const double st = score(unit_.blocks(t));
          const double cur = score(unit_.blocks(c.tau[static_cast<size_t>(j)]));
          if (std::max(st, top) > cur) c.tau[static_cast<size_t>(j)] = st >= top ? t : grid_[arg];
          c.evals += static_cast<long>(grid_.size()) + 60;
          units[static_cast<size_t>(j)] = unit_.unit(c.tau[static_cast<size_t>(j)]);
          prefix = egate_[static_cast<int>(c.gates[static_cast<size_t>(j + 1)])] * units[static_cast<size_t>(j)] * prefix;
        }
      }
      best = fidelity(c.tau, c.gates);
      for (size_t slot = 0; slot < c.gates.size(); ++slot) {
        const ElectronGate keep = c.gates[slot];
        ElectronGate choice = keep;
        for (ElectronGate g : kElectronGateMenu) {
          if (g == keep) continue;
          c.gates[slot] = g;
          const double f = fidelity(c.tau, c.gates);
          ++c.evals;
          if (f > best + 1e-13) {
            best = f;
            choice = g;
          }
        }
        c.gates[slot] = choice;
      }
      if (best - before < 1e-10) break;
    }
    c.fidelity = best;
    return c;
  }

  /// Nelder-Mead over all spacings (in ns) with fixed electron gates.
  Candidate polish(Candidate c) const {
    if (c.tau.empty()) return c;
    optimize::Bounds b;
    b.lower.assign(c.tau.size(), opt_.tau_min * 1e9);
    b.upper.assign(c.tau.size(), tau_max_ * 1e9);
    auto objective = [&](const std::vector<double>& x) {
      std::vector<double> tau(x.size());
      for (size_t i = 0; i < x.size(); ++i) tau[i] = x[i] * 1e-9;
      return 1.0 - fidelity(tau, c.gates);
    };
    std::vector<double> x(c.tau.size());
    for (size_t i = 0; i < x.size(); ++i) x[i] = c.tau[i] * 1e9;
    optimize::NelderMeadOptions nm;
    nm.max_evals = 4000 * static_cast<long>(x.size());
    nm.initial_step = 0.05;
    for (int round = 0; round < 3; ++round) {
      auto r = optimize::nelder_mead(objective, x, b, nm);
      c.evals += r.evals;
      if (1.0 - r.f <= c.fidelity + 1e-14) break;
      x = r.x;
      c.fidelity = 1.0 - r.f;
      nm.initial_step *= 0.2;
    }
    for (size_t i = 0; i < x.size(); ++i) c.tau[i] = x[i] * 1e-9;
    c.fidelity = fidelity(c.tau, c.gates);
    return c;
  }

 private:
  Mat4c target_, target_adj_;
  SecularUnit unit_;
  SynthesisOptions opt_;
  double tau_max_ = 0;
  std::array<Mat4c, 5> egate_;
  std::vector<double> grid_;
  std::vector<std::pair<Mat2c, Mat2c>> grid_blocks_;
};

}  // namespace detail

/// Searches k = min_k ... max_k and returns the shortest sequence meeting the
/// threshold at the first k where any restart does; otherwise the best found,
/// flagged below threshold.
inline SynthesisReport synthesize(const Mat4c& target, const std::string& name, const SpinSystemParams& p,
                                  const SynthesisOptions& opt = {}) {
  p.validate();
  if (!(opt.threshold > 0 && opt.threshold <= 1)) throw std::invalid_argument("threshold must lie in (0, 1]");
  if (opt.max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  Unitary(CMatrix(target));  // throws if the target is not unitary

  SynthesisReport report;
  report.target_name = name;
  long evals = 0;

  // k = 0: a bare electron gate (or nothing).
  {
    detail::Candidate best;
    for (ElectronGate g : kElectronGateMenu) {
      const double f = gate_fidelity(CMatrix(electron_gate_4(g)), CMatrix(target));
      ++evals;
      if (f > best.fidelity + 1e-15) best = {{}, {g}, f, 0};
    }
    if (opt.min_k <= 0 && best.fidelity >= opt.threshold) {
      report.sequence = best.gates[0] == ElectronGate::I ? DDSequence{} : DDSequence{{}, best.gates};
      report.unitary_fidelity = best.fidelity;
      report.iterations = evals;
      report.below_threshold = false;
      return report;
    }
    report.sequence = DDSequence{{}, best.gates};
    report.unitary_fidelity = best.fidelity;
  }

  const detail::SequenceSearch search(target, p, opt);
  for (int k = std::max(1, opt.min_k); k <= opt.max_k; ++k) {
    std::vector<detail::Candidate> found(static_cast<size_t>(opt.restarts));
    parallel_for(found.size(), opt.workers, [&](size_t r) {
      found[r] = search.descend(k, static_cast<uint64_t>(k) * 100003u + r);
    });
    for (const auto& c : found) evals += c.evals;
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.fidelity > b.fidelity; });
    const size_t npolish = std::min(found.size(), static_cast<size_t>(std::max(1, opt.polish_top)));
    std::vector<detail::Candidate> polished(npolish);
    parallel_for(npolish, opt.workers, [&](size_t i) { polished[i] = search.polish(found[i]); });
    for (const auto& c : polished) evals += c.evals;

    const detail::Candidate* pick = nullptr;
    for (const auto& c : polished) {
      if (c.fidelity < opt.threshold) continue;
      if (!pick || c.duration() < pick->duration() - 1e-15 ||
          (std::abs(c.duration() - pick->duration()) <= 1e-15 && c.fidelity > pick->fidelity))
        pick = &c;
    }
    const auto& top = *std::max_element(polished.begin(), polished.end(),
                                        [](const auto& a, const auto& b) { return a.fidelity < b.fidelity; });
    if (pick || top.fidelity > report.unitary_fidelity) {
      const auto& c = pick ? *pick : top;
      report.sequence = DDSequence{c.tau, c.gates};
      report.unitary_fidelity = c.fidelity;
    }
    if (pick) {
      report.below_threshold = false;
      break;
    }
  }
  report.iterations = evals;
  return report;
}

inline SynthesisReport synthesize(const std::string& target_name, const SpinSystemParams& p, const SynthesisOptions& opt = {}) {
  const auto t = named_target(target_name);
  if (!t) throw std::invalid_argument("unknown target '" + target_name + "'");
  return synthesize(*t, target_name, p, opt);
}

// ---------------------------------------------------------------------------
// Noisy evaluation
// ---------------------------------------------------------------------------

/// The 16 products of single-qubit Pauli eigenstates |0>, |1>, |+>, |+i>.
inline std::vector<Eigen::Vector4cd> tomographic_inputs() {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<Eigen::Vector2cd, 4> singles{Eigen::Vector2cd(1, 0), Eigen::Vector2cd(0, 1), Eigen::Vector2cd(h, h),
                                                Eigen::Vector2cd(h, cplx(0, h))};
  std::vector<Eigen::Vector4cd> out;
  for (const auto& a : singles)
    for (const auto& b : singles) {
      Eigen::Vector4cd v;
      v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
      out.push_back(v);
    }
  return out;
}

/// Mean over the tomographic inputs of |<T psi | U psi>|.
inline double tomographic_fidelity(const Mat4c& u, const Mat4c& target) {
  double s = 0;
  const auto inputs = tomographic_inputs();
  for (const auto& psi : inputs) s += std::abs((target * psi).dot(u * psi));
  return s / static_cast<double>(inputs.size());
}

struct MeanWithError {
  double mean = 0;
  double stderr_ = 0;
};

inline MeanWithError mean_and_stderr(const std::vector<double>& v) {
  MeanWithError r;
  if (v.empty()) return r;
  for (double x : v) r.mean += x;
  r.mean /= static_cast<double>(v.size());
  if (v.size() > 1) {
    double ss = 0;
    for (double x : v) ss += (x - r.mean) * (x - r.mean);
    r.stderr_ = std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
  }
  return r;
}

/// Trajectory-averaged tomographic fidelity of a sequence under the bath.
inline MeanWithError noisy_gate_fidelity(const DDSequence& seq, const SpinSystemParams& p, const Mat4c& target,
                                         const OUNoise& noise, int trials, int workers = 1) {
  if (trials < 100) throw std::invalid_argument("noisy_gate_fidelity needs at least 100 trials");
  const Mat4c h = secular_hamiltonian(p);
  const OUNoise n = seq.k() > 0 ? noise.with_default_step(seq.shortest_segment()) : noise;
  const double duration = std::max(seq.total_duration(), 1e-12);
  std::vector<double> per(static_cast<size_t>(trials));
  parallel_for(per.size(), workers, [&](size_t j) {
    const auto traj = sample_trajectory(n, duration, j);
    per[j] = tomographic_fidelity(noisy_sequence_unitary(seq, h, traj, 0.0), target);
  });
  return mean_and_stderr(per);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline constexpr const char* kGateFormat = "hfcluster-ddseq/1";

struct GateFile {
  std::string target;
  SpinSystemParams params;
  DDSequence sequence;
  double fidelity = 0;
};

inline std::string to_text(const GateFile& g) {
  std::ostringstream o;
  o << "# synthesized dynamical-decoupling gate\n";
  o << "format = " << kGateFormat << "\n";
  o << "target = " << g.target << "\n";
  o << "a_par_hz = " << format_double(g.params.a_par_hz) << "\n";
  o << "a_perp_hz = " << format_double(g.params.a_perp_hz) << "\n";
  o << "gamma_e_hz_per_t = " << format_double(g.params.gamma_e_hz_per_t) << "\n";
  o << "gamma_n_hz_per_t = " << format_double(g.params.gamma_n_hz_per_t) << "\n";
  o << "b_x_t = " << format_double(g.params.b_t.x()) << "\n";
  o << "b_y_t = " << format_double(g.params.b_t.y()) << "\n";
  o << "b_z_t = " << format_double(g.params.b_t.z()) << "\n";
  o << "fidelity = " << format_double(g.fidelity) << "\n";
  o << "duration_s = " << format_double(g.sequence.total_duration()) << "\n";
  o << "k = " << g.sequence.k() << "\n";
  o << "electron_gates =";
  for (auto e : g.sequence.electron_gates) o << ' ' << to_string(e);
  o << "\ntau_f_s =";
  for (double t : g.sequence.tau_f) o << ' ' << format_double(t);
  o << "\n";
  return o.str();
}

inline GateFile parse_gate_file(std::string_view text) {
  const auto cfg = KeyValueConfig::parse(text, "gate file");
  if (cfg.str("format") != kGateFormat) throw ConfigError("unsupported gate format '" + cfg.str("format") + "'");
  GateFile g;
  g.target = cfg.str("target");
  g.params.a_par_hz = cfg.num("a_par_hz");
  g.params.a_perp_hz = cfg.num("a_perp_hz", g.params.a_par_hz);
  g.params.gamma_e_hz_per_t = cfg.num("gamma_e_hz_per_t", g.params.gamma_e_hz_per_t);
  g.params.gamma_n_hz_per_t = cfg.num("gamma_n_hz_per_t");
  g.params.b_t = Vec3(cfg.num("b_x_t"), cfg.num("b_y_t", 0.0), cfg.num("b_z_t"));
  g.fidelity = cfg.num("fidelity");
  if (cfg.has("electron_gates"))
    for (const auto& w : cfg.words("electron_gates")) g.sequence.electron_gates.push_back(parse_electron_gate(w));
  if (cfg.has("tau_f_s")) g.sequence.tau_f = cfg.nums("tau_f_s");
  if (cfg.integer("k") != g.sequence.k()) throw ConfigError("gate file k does not match the number of spacings");
  g.sequence.validate();
  return g;
}

}  // namespace hfcluster
