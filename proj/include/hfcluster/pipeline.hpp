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

// End-to-end sweeps behind the CSV figures: 2x2 fidelity over (A_par, T2),
// fidelity against cluster length, emission fidelity over (tau, dw) and the
// generation-rate table.

#pragma once

#include "hfcluster/budget.hpp"
#include "hfcluster/cluster_protocol.hpp"
#include "hfcluster/emission_model.hpp"
#include "hfcluster/gate_synthesis.hpp"
#include "hfcluster/noise_bath.hpp"
#include "hfcluster/report.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfcluster {

/// Synthesis threshold for gates fed into the protocol.
inline constexpr double kProtocolGateThreshold = 0.999;

inline SynthesisOptions protocol_synthesis_options() {
  SynthesisOptions o;
  o.threshold = kProtocolGateThreshold;
  o.restarts = 24;
  return o;
}

struct SwapCzPair {
  SynthesisReport swap, cz;
};

/// SWAP and CZ from synthesis, Ry(pi/2) as an ideal electron pulse.
inline GateLibrary build_gate_library(const SwapCzPair& gates) {
  GateLibrary lib = GateLibrary::ideal();
  lib.set_sequence("swap", gates.swap.sequence);
  lib.set_sequence("cz", gates.cz.sequence);
  return lib;
}

inline SwapCzPair synthesize_swap_cz(const SpinSystemParams& p, const SynthesisOptions& opt, SynthesisCache& cache) {
  return {cache.get(p, "swap", opt), cache.get(p, "cz", opt)};
}

/// Bath with T2* = ratio * T2.
inline OUNoise bath_for(double t2_s, double t2_star_ratio, uint64_t seed) {
  if (!(t2_star_ratio > 0 && t2_star_ratio < 1)) throw std::invalid_argument("T2*/T2 ratio must lie in (0, 1)");
  return ou_from_coherence(t2_star_ratio * t2_s, t2_s, seed);
}

struct SweepOptions {
  SynthesisOptions synthesis = protocol_synthesis_options();
  int trials = 2000;
  int workers = 1;
  uint64_t seed = 1;
  double t2_star_ratio = 0.01;
};

// ---------------------------------------------------------------------------
// 2x2 fidelity over (A_par, T2)
// ---------------------------------------------------------------------------

struct Fig3aPoint {
  double a_par_hz = 0, t2_s = 0;
  double bx_t = 0, bz_t = 0;
  double swap_s = 0, cz_s = 0, block_s = 0;
  double fidelity = 0, stderr_ = 0;
};

/// Field chosen per (A_par, T2) to minimise the block duration, then a noisy
/// 2x2 run with the resulting gates.
inline Fig3aPoint fig3a_point(const SpinSystemParams& base, double a_par_hz, double t2_s,
                              const std::vector<std::pair<double, double>>& grid, const SweepOptions& o,
                              SynthesisCache& cache) {
  FieldConstraints c;
  const FieldChoice f = minimize_sequence_field(base, a_par_hz, t2_s, grid, c, o.synthesis, cache, o.workers);
  SpinSystemParams p = base;
  p.a_par_hz = a_par_hz;
  p.a_perp_hz = base.a_perp_hz * a_par_hz / base.a_par_hz;
  p.b_t = Vec3(f.bx_t, 0, f.bz_t);

  ProtocolSpec spec;
  spec.m = 2;
  spec.n = 2;
  spec.params = p;
  spec.library = build_gate_library({f.swap, f.cz});
  spec.noise = bath_for(t2_s, o.t2_star_ratio, o.seed);
  spec.trials = o.trials;
  spec.workers = o.workers;
  const ProtocolResult r = run(spec);
  return {a_par_hz, t2_s, f.bx_t, f.bz_t, f.swap.sequence.total_duration(), f.cz.sequence.total_duration(), f.block_s,
          r.fidelity, r.fidelity_stderr};
}

inline CsvTable fig3a_table(const std::vector<Fig3aPoint>& pts) {
  CsvTable t("fig3a",
             {{"a_par_mhz", "secular hyperfine coupling (MHz)"},
              {"t2_us", "electron Hahn-echo T2 (us)"},
              {"bx_t", "selected transverse field (T)"},
              {"bz_t", "selected axial field (T)"},
              {"swap_us", "SWAP sequence duration (us)"},
              {"cz_us", "CZ sequence duration (us)"},
              {"block_us", "one 2-rail building block (us)"},
              {"fidelity", "2x2 cluster-state fidelity, trajectory mixture"},
              {"stderr", "standard error of the fidelity"}});
  for (const auto& p : pts)
    t.add_row({p.a_par_hz / 1e6, p.t2_s * 1e6, p.bx_t, p.bz_t, p.swap_s * 1e6, p.cz_s * 1e6, p.block_s * 1e6, p.fidelity,
               p.stderr_});
  return t;
}

// ---------------------------------------------------------------------------
// Fidelity against cluster length
// ---------------------------------------------------------------------------

struct Fig3bSeries {
  std::string label;
  double t2_s = 0;  // 0 for the fixed-factor reference curves
  FidelityBudget budget;
  double prep_stderr = 0, block_stderr = 0;
};

/// Measures (f_prep, f_block) for each T2 on a 2-rail register.
inline std::vector<Fig3bSeries> fig3b_series(const SpinSystemParams& p, const GateLibrary& lib,
                                             const std::vector<double>& t2_values, const SweepOptions& o,
                                             double photon_gate_limit = 0.94) {
  std::vector<Fig3bSeries> out;
  for (double t2 : t2_values) {
    ProtocolSpec spec;
    spec.m = 2;
    spec.n = 1;
    spec.params = p;
    spec.library = lib;
    spec.noise = bath_for(t2, o.t2_star_ratio, o.seed);
    spec.trials = o.trials;
    spec.workers = o.workers;
    const FactorFidelities f = factor_fidelities(spec);
    out.push_back({"T2=" + format_cell(t2 * 1e6) + "us", t2, {f.prep, f.block, 1.0, 2, 0}, f.prep_stderr, f.block_stderr});
  }
  // Fixed factors: 99.9% preparation, 99.8% block, with and without a
  // lossy spin-photon gate.
  out.push_back({"reference", 0, {0.999, 0.998, 1.0, 2, 0}, 0, 0});
  out.push_back({"reference_photon_gate", 0, {0.999, 0.998, photon_gate_limit, 2, 0}, 0, 0});
  return out;
}

inline CsvTable fig3b_table(const std::vector<Fig3bSeries>& series, int max_columns) {
  if (max_columns < 1) throw std::invalid_argument("need at least one column");
  CsvTable t("fig3b", {{"series", "curve label"},
                       {"t2_us", "T2 of the simulated bath (us), 0 for fixed-factor curves"},
                       {"columns", "cluster length N"},
                       {"photons", "photon count 2N"},
                       {"f_prep", "preparation fidelity"},
                       {"f_block", "per-column block fidelity"},
                       {"f_photon_gate", "spin-photon gate fidelity per photon"},
                       {"fidelity", "extrapolated cluster-state fidelity"}});
  for (const auto& s : series)
    for (int n = 1; n <= max_columns; ++n) {
      FidelityBudget b = s.budget;
      b.n = n;
      t.add_row({s.label, s.t2_s * 1e6, static_cast<long long>(n), static_cast<long long>(b.photons()), b.f_prep, b.f_block,
                 b.f_photon_gate, extrapolated_fidelity(b)});
    }
  return t;
}

// ---------------------------------------------------------------------------
// Emission fidelity surface
// ---------------------------------------------------------------------------

struct Fig3cGrid {
  double tau_min_s = 0.1e-9, tau_max_s = 10e-9;
  double dw_min_rad_s = 0.1e9, dw_max_rad_s = 10e9;
  int tau_points = 40, dw_points = 40;
  bool log_spacing = true;

  void validate() const {
    if (!(tau_min_s > 0 && tau_max_s > tau_min_s)) throw std::invalid_argument("invalid lifetime range");
    if (!(dw_min_rad_s > 0 && dw_max_rad_s > dw_min_rad_s)) throw std::invalid_argument("invalid precession range");
    if (tau_points < 2 || dw_points < 2) throw std::invalid_argument("grid needs at least two points per axis");
  }
};

inline std::vector<double> axis_points(double lo, double hi, int n, bool log) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / (n - 1);
    v[static_cast<size_t>(i)] = log ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
  }
  return v;
}

inline CsvTable fig3c_table(const Fig3cGrid& g) {
  g.validate();
  CsvTable t("fig3c", {{"tau_ns", "excited-state lifetime (ns)"},
                       {"delta_omega_rad_s", "ground/excited precession mismatch (rad/s)"},
                       {"product", "delta_omega * tau"},
                       {"fidelity", "spin-photon entanglement fidelity"}});
  t.add_note("colour-encoding ceiling " + format_cell(colour_encoding_floor()));
  for (double tau : axis_points(g.tau_min_s, g.tau_max_s, g.tau_points, g.log_spacing))
    for (double dw : axis_points(g.dw_min_rad_s, g.dw_max_rad_s, g.dw_points, g.log_spacing)) {
      EmissionParams e;
      e.tau_s = tau;
      e.delta_omega = dw;
      t.add_row({tau * 1e9, dw, e.product(), emission_fidelity(e)});
    }
  return t;
}

// ---------------------------------------------------------------------------
// Rates
// ---------------------------------------------------------------------------

struct RateCase {
  std::string label;
  int m = 2, n = 5;
  double duration_s = 3e-6;
};

inline std::vector<RateCase> default_rate_cases() { return {{"2x5", 2, 5, 3e-6}, {"2x50", 2, 50, 30e-6}}; }

inline CsvTable rates_table(const std::vector<RateCase>& cases, double eta_combined,
                            const std::optional<GateLibrary>& modelled = std::nullopt) {
  CsvTable t("rates", {{"case", "cluster shape"},
                       {"photons", "photon count M*N"},
                       {"duration_us", "scheme duration (us)"},
                       {"duration_source", "given, or modelled from the synthesized gate library"},
                       {"eta_combined", "product of generation, emission, collection and detection efficiencies"},
                       {"rate_hz", "cluster generation rate (Hz)"}});
  const auto e = EfficiencyBudget::combined_value(eta_combined);
  for (const auto& c : cases) {
    t.add_row({c.label, static_cast<long long>(c.m * c.n), c.duration_s * 1e6, std::string("given"), eta_combined,
               generation_rate(e, c.m * c.n, c.duration_s)});
    if (modelled) {
      const double d = wall_clock_model(build_schedule(c.m, c.n), *modelled);
      if (d > 0)
        t.add_row({c.label, static_cast<long long>(c.m * c.n), d * 1e6, std::string("modelled"), eta_combined,
                   generation_rate(e, c.m * c.n, d)});
    }
  }
  return t;
}

}  // namespace hfcluster
