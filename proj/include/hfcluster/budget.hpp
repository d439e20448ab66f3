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

// Closed-form fidelity extrapolation, generation rate and magnetic-field
// selection for the shortest building block.

#pragma once

#include "hfcluster/cluster_protocol.hpp"
#include "hfcluster/gate_synthesis.hpp"
#include "hfcluster/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hfcluster {

struct EfficiencyBudget {
  double eta_qe = 1, eta_dwf = 1, eta_ce = 1, eta_de = 1;

  static EfficiencyBudget combined_value(double eta) { return {eta, 1, 1, 1}; }

  double combined() const { return eta_qe * eta_dwf * eta_ce * eta_de; }

  void validate() const {
    for (double e : {eta_qe, eta_dwf, eta_ce, eta_de})
      if (!(e >= 0 && e <= 1)) throw std::invalid_argument("efficiencies must lie in [0, 1]");
  }
};

struct FidelityBudget {
  double f_prep = 1;
  double f_block = 1;
  double f_photon_gate = 1;  // spin-photon entanglement fidelity per photon
  int m = 2;
  int n = 1;

  int photons() const { return m * n; }

  void validate() const {
    for (double f : {f_prep, f_block, f_photon_gate})
      if (!(f >= 0 && f <= 1)) throw std::invalid_argument("fidelities must lie in [0, 1]");
    if (m < 1 || n < 0) throw std::invalid_argument("invalid cluster dimensions");
  }
};

/// F = f_prep * f_block^N * f_photon^(M N); initialisation and readout are
/// taken as perfect.
inline double extrapolated_fidelity(const FidelityBudget& b) {
  b.validate();
  return b.f_prep * std::pow(b.f_block, b.n) * std::pow(b.f_photon_gate, b.photons());
}

/// R = (eta_QE eta_DWF eta_CE eta_DE)^photons / duration.
inline double generation_rate(const EfficiencyBudget& e, int photons, double scheme_duration_s) {
  e.validate();
  if (!(scheme_duration_s > 0)) throw std::invalid_argument("scheme duration must be positive");
  if (photons < 0) throw std::invalid_argument("photon count must be non-negative");
  return std::pow(e.combined(), photons) / scheme_duration_s;
}

// ---------------------------------------------------------------------------
// Field selection
// ---------------------------------------------------------------------------

/// Memoises synthesis results by system parameters, target and search
/// options. Reads take a shared lock; a miss synthesises outside the lock
/// and then publishes.
class SynthesisCache {
 public:
  using Key = std::tuple<double, double, double, double, double, double, std::string, double, int, int, uint64_t>;

  SynthesisReport get(const SpinSystemParams& p, const std::string& target, const SynthesisOptions& opt) {
    const Key key{p.a_par_hz, p.a_perp_hz, p.gamma_e_hz_per_t, p.gamma_n_hz_per_t, p.b_t.x(), p.b_t.z(), target,
                  opt.threshold, opt.restarts, opt.max_k, opt.seed};
    {
      std::shared_lock lock(mutex_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    SynthesisReport r = synthesize(target, p, opt);
    std::unique_lock lock(mutex_);
    return map_.try_emplace(key, std::move(r)).first->second;
  }

  size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, SynthesisReport> map_;
};

struct FieldConstraints {
  double mw_ceiling_hz = 20e9;  // upper bound on gamma_e * Bz
  int rails = 2;                // block layout used for the duration sum
};

struct FieldPoint {
  double bx_t = 0, bz_t = 0;
  double swap_s = 0, cz_s = 0, block_s = 0;
  double mw_hz = 0;      // electron splitting gamma_e * Bz
  bool feasible = false;
  bool pareto = false;  // no feasible point is both shorter and lower in frequency
  std::string reason;
};

struct FieldChoice {
  double bx_t = 0, bz_t = 0;
  double block_s = 0;
  bool block_exceeds_t2 = false;
  SynthesisReport swap, cz;
  std::vector<FieldPoint> points;
};

inline std::vector<std::pair<double, double>> field_grid(const std::vector<double>& bx, const std::vector<double>& bz) {
  std::vector<std::pair<double, double>> g;
  for (double x : bx)
    for (double z : bz) g.emplace_back(x, z);
  return g;
}

/// Default grid: Bx, Bz in 0.1 T steps over (0, 1.2] T.
inline std::vector<std::pair<double, double>> default_field_grid() {
  std::vector<double> v;
  for (int i = 1; i <= 12; ++i) v.push_back(0.1 * i);
  return field_grid(v, v);
}

/// Duration of one building block (entangle, emit, rotate) for the given
/// gate durations.
inline double block_duration(int rails, double swap_s, double cz_s, ScheduleStyle style = ScheduleStyle::Stepwise) {
  int swaps = 0, czs = 0;
  for (const auto& st : build_schedule(rails, 1, style))
    if (st.column == 0 && st.kind == StepKind::Gate) {
      swaps += st.gate == "swap";
      czs += st.gate == "cz";
    }
  return swaps * swap_s + czs * cz_s;
}

/// Synthesises SWAP and CZ at every grid point and returns the field with
/// the shortest building block. Each point also records whether it lies on
/// the trade-off front of block duration against microwave frequency. A point is infeasible if it breaks the
/// microwave ceiling or if either gate misses the threshold. T2 does not
/// move the argmin; the choice only records whether the block outlasts it.
inline FieldChoice minimize_sequence_field(const SpinSystemParams& base, double a_par_hz, double t2_s,
                                           const std::vector<std::pair<double, double>>& grid, const FieldConstraints& c,
                                           const SynthesisOptions& opt, SynthesisCache& cache, int workers = 1) {
  if (grid.empty()) throw std::invalid_argument("empty field grid");
  std::vector<FieldPoint> pts(grid.size());
  std::vector<SynthesisReport> swaps(grid.size()), czs(grid.size());
  SynthesisOptions inner = opt;
  inner.workers = 1;  // grid points already run in parallel
  parallel_for(grid.size(), workers, [&](size_t i) {
    FieldPoint& pt = pts[i];
    pt.bx_t = grid[i].first;
    pt.bz_t = grid[i].second;
    SpinSystemParams p = base;
    p.a_par_hz = a_par_hz;
    p.a_perp_hz = base.a_perp_hz * a_par_hz / base.a_par_hz;
    p.b_t = Vec3(pt.bx_t, 0, pt.bz_t);
    pt.mw_hz = p.electron_splitting_hz();
    if (pt.mw_hz > c.mw_ceiling_hz) {
      pt.reason = "microwave ceiling";
      return;
    }
    try {
      swaps[i] = cache.get(p, "swap", inner);
      czs[i] = cache.get(p, "cz", inner);
    } catch (const std::domain_error&) {
      pt.reason = "degenerate precession";
      return;
    }
    pt.swap_s = swaps[i].sequence.total_duration();
    pt.cz_s = czs[i].sequence.total_duration();
    pt.block_s = block_duration(c.rails, pt.swap_s, pt.cz_s);
    if (swaps[i].below_threshold || czs[i].below_threshold) {
      pt.reason = "below threshold";
      return;
    }
    pt.feasible = true;
  });

  FieldChoice best;
  best.block_s = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].feasible && pts[i].block_s < best.block_s) {
      best.bx_t = pts[i].bx_t;
      best.bz_t = pts[i].bz_t;
      best.block_s = pts[i].block_s;
      best.swap = swaps[i];
      best.cz = czs[i];
    }
  }
  for (auto& a : pts) {
    if (!a.feasible) continue;
    a.pareto = std::none_of(pts.begin(), pts.end(), [&](const FieldPoint& b) {
      return b.feasible && b.block_s <= a.block_s && b.mw_hz <= a.mw_hz && (b.block_s < a.block_s || b.mw_hz < a.mw_hz);
    });
  }
  best.points = std::move(pts);
  if (!std::isfinite(best.block_s)) throw std::runtime_error("gate synthesis failed at every field grid point");
  best.block_exceeds_t2 = t2_s > 0 && best.block_s > t2_s;
  return best;
}

}  // namespace hfcluster
