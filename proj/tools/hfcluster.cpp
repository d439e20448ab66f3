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


// Command-line driver: gate synthesis, protocol runs, figure sweeps, the
// invariant suite and the rate model. Exit codes: 0 success, 1 check failure,
// 2 usage error.

#include "hfcluster/budget.hpp"
#include "hfcluster/config.hpp"
#include "hfcluster/invariants.hpp"
#include "hfcluster/pipeline.hpp"
#include "hfcluster/presets.hpp"
#include "hfcluster/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hfcluster;

constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

/// A failed check rather than a usage error.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string text_of(const std::string& v) { return v; }
// NaN marks an override that was not given.
std::string text_of(double v) { return std::isnan(v) ? "unset" : format_double(v); }
std::string text_of(int v) { return std::to_string(v); }
std::string text_of(uint64_t v) { return std::to_string(v); }
std::string text_of(bool v) { return v ? "true" : "false"; }
std::string text_of(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : " ") + format_double(x);
  return s;
}

void assign(const KeyValueConfig& c, const std::string& k, std::string& v) { v = c.str(k); }
void assign(const KeyValueConfig& c, const std::string& k, double& v) { v = c.str(k) == "unset" ? NAN : c.num(k); }
void assign(const KeyValueConfig& c, const std::string& k, int& v) { v = static_cast<int>(c.integer(k)); }
void assign(const KeyValueConfig& c, const std::string& k, uint64_t& v) { v = static_cast<uint64_t>(c.integer(k)); }
void assign(const KeyValueConfig& c, const std::string& k, std::vector<double>& v) { v = c.nums(k); }
void assign(const KeyValueConfig& c, const std::string& k, bool& v) {
  const std::string s = c.str(k);
  if (s != "true" && s != "false") throw ConfigError("key '" + k + "' must be true or false");
  v = s == "true";
}

/// Registers options whose defaults come from the config file ("scope.name"
/// first, then bare "name") and whose final values are echoed into output
/// headers.
class Knobs {
 public:
  explicit Knobs(const KeyValueConfig& file) : file_(file) {}

  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& scope, const std::string& name, T& var, const std::string& help) {
    seed_from_file(scope, name, var);
    return app->add_option("--" + name, var, help)->capture_default_str();
  }

  template <class T>
  CLI::Option* add_flag(CLI::App* app, const std::string& scope, const std::string& name, T& var, const std::string& help) {
    seed_from_file(scope, name, var);
    return app->add_flag("--" + name, var, help);
  }

  /// Effective settings of the global scope and the given subcommand scope.
  /// The output path is left out so the header depends only on inputs.
  KeyValueConfig effective(const std::string& scope) const {
    KeyValueConfig c;
    for (const auto& e : entries_)
      if ((e.scope.empty() && e.name != "output") || e.scope == scope)
        c.set(e.scope.empty() ? e.name : e.scope + "." + e.name, e.value());
    return c;
  }

 private:
  template <class T>
  void seed_from_file(const std::string& scope, const std::string& name, T& var) {
    if (!scope.empty() && file_.has(scope + "." + name)) assign(file_, scope + "." + name, var);
    else if (file_.has(name)) assign(file_, name, var);
    entries_.push_back({scope, name, [&var] { return text_of(var); }});
  }

  struct Entry {
    std::string scope, name;
    std::function<std::string()> value;
  };
  const KeyValueConfig& file_;
  std::vector<Entry> entries_;
};

/// --config is needed before the parser is built, since it seeds defaults.
std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

struct Globals {
  std::string preset = "siv29";
  uint64_t seed = 1;
  int workers = 0;
  std::string output;
  std::string config;
  std::string schedule = "stepwise";
  double a_par_hz = NAN, bx_t = NAN, bz_t = NAN;

  int resolved_workers() const { return workers > 0 ? workers : default_workers(); }

  ScheduleStyle style() const { return schedule == "compact" ? ScheduleStyle::Compact : ScheduleStyle::Stepwise; }

  /// Preset parameters with any field or coupling overrides applied.
  SpinSystemParams params(const Preset& p) const {
    SpinSystemParams s = p.params;
    if (std::isfinite(a_par_hz)) {
      s.a_perp_hz *= a_par_hz / s.a_par_hz;
      s.a_par_hz = a_par_hz;
    }
    if (std::isfinite(bx_t)) s.b_t.x() = bx_t;
    if (std::isfinite(bz_t)) s.b_t.z() = bz_t;
    s.validate();
    return s;
  }
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty() || g.output == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + g.output);
  f << text;
}

SynthesisOptions synthesis_options(double threshold, int restarts, uint64_t seed, int workers) {
  SynthesisOptions o = protocol_synthesis_options();
  o.threshold = threshold;
  o.restarts = restarts;
  o.seed = seed;
  o.workers = workers;
  return o;
}

SwapCzPair protocol_gates(const SpinSystemParams& p, const SynthesisOptions& o, SynthesisCache& cache) {
  SwapCzPair g = synthesize_swap_cz(p, o, cache);
  for (const auto* r : {&g.swap, &g.cz})
    if (r->below_threshold)
      std::cerr << "warning: " << r->target_name << " reached only " << format_cell(r->unitary_fidelity) << "\n";
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const std::string config_path = find_config_path(argc, argv);
    const KeyValueConfig file = config_path.empty() ? KeyValueConfig{} : KeyValueConfig::load(config_path);
    Knobs knobs(file);
    Globals g;

    CLI::App app{"Cluster-state generation from a hyperfine-coupled spin register"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", g.config, "flat key = value file; flags override its values");
    knobs.add(&app, "", "preset", g.preset, "system preset name");
    knobs.add(&app, "", "seed", g.seed, "random seed");
    knobs.add(&app, "", "workers", g.workers, "worker threads, 0 for all cores");
    knobs.add(&app, "", "output", g.output, "output file, stdout if empty");
    knobs.add(&app, "", "schedule", g.schedule, "gate schedule: stepwise or compact")
        ->check(CLI::IsMember({"stepwise", "compact"}));
    knobs.add(&app, "", "a-par-hz", g.a_par_hz, "override the secular hyperfine coupling (Hz)");
    knobs.add(&app, "", "bx", g.bx_t, "override the transverse field (T)");
    knobs.add(&app, "", "bz", g.bz_t, "override the axial field (T)");

    // synthesize
    std::string target = "swap";
    double threshold = kProtocolGateThreshold;
    int restarts = 48, max_k = 26;
    auto* syn = app.add_subcommand("synthesize", "synthesize a two-qubit gate as a decoupling sequence");
    knobs.add(syn, "synthesize", "target", target, "target gate")->check(CLI::IsMember(target_names()));
    knobs.add(syn, "synthesize", "threshold", threshold, "unitary fidelity threshold");
    knobs.add(syn, "synthesize", "restarts", restarts, "multi-start restarts per unit count");
    knobs.add(syn, "synthesize", "max-k", max_k, "largest number of decoupling units");

    // run
    int m = 2, n = 2, trials = 2000, proto_restarts = 24;
    double t2_us = NAN;
    bool ideal = false;
    auto* runc = app.add_subcommand("run", "simulate one cluster-state generation protocol");
    knobs.add(runc, "run", "m", m, "rails (nuclear register size)");
    knobs.add(runc, "run", "n", n, "columns");
    knobs.add(runc, "run", "t2-us", t2_us, "Hahn-echo T2 in microseconds, preset value if unset");
    knobs.add(runc, "run", "trials", trials, "noise trajectories");
    knobs.add(runc, "run", "restarts", proto_restarts, "synthesis restarts for SWAP and CZ");
    knobs.add_flag(runc, "run", "ideal", ideal, "ideal gates and no bath");

    // figure
    std::string figure;
    std::vector<double> fig_a_mhz{40, 55, 70, 85}, fig_t2_us{2, 8, 30, 300}, fig_bx{0.3, 0.6, 0.9}, fig_bz{0.3, 0.6, 0.9};
    std::vector<double> fig3b_t2_us{2, 8, 300};
    int fig_trials = 2000, fig_restarts = 24, max_columns = 50;
    double photon_gate = 0.94;
    Fig3cGrid grid3c;
    double tau_min_ns = grid3c.tau_min_s * 1e9, tau_max_ns = grid3c.tau_max_s * 1e9;
    bool modelled = false;
    double eta = NAN;
    auto* fig = app.add_subcommand("figure", "write the CSV behind one figure");
    fig->add_option("name", figure, "fig3a, fig3b, fig3c or rates")
        ->required()
        ->check(CLI::IsMember({"fig3a", "fig3b", "fig3c", "rates"}));
    knobs.add(fig, "figure", "a-par-mhz", fig_a_mhz, "fig3a hyperfine couplings (MHz)")->expected(1, -1);
    knobs.add(fig, "figure", "t2-us", fig_t2_us, "fig3a T2 values (us)")->expected(1, -1);
    knobs.add(fig, "figure", "field-bx", fig_bx, "fig3a transverse field grid (T)")->expected(1, -1);
    knobs.add(fig, "figure", "field-bz", fig_bz, "fig3a axial field grid (T)")->expected(1, -1);
    knobs.add(fig, "figure", "fig3b-t2-us", fig3b_t2_us, "fig3b T2 values (us)")->expected(1, -1);
    knobs.add(fig, "figure", "trials", fig_trials, "noise trajectories per point");
    knobs.add(fig, "figure", "restarts", fig_restarts, "synthesis restarts per gate");
    knobs.add(fig, "figure", "max-columns", max_columns, "fig3b longest cluster");
    knobs.add(fig, "figure", "photon-gate", photon_gate, "fig3b spin-photon gate fidelity of the lossy reference");
    knobs.add(fig, "figure", "tau-min-ns", tau_min_ns, "fig3c shortest lifetime (ns)");
    knobs.add(fig, "figure", "tau-max-ns", tau_max_ns, "fig3c longest lifetime (ns)");
    knobs.add(fig, "figure", "dw-min", grid3c.dw_min_rad_s, "fig3c smallest precession mismatch (rad/s)");
    knobs.add(fig, "figure", "dw-max", grid3c.dw_max_rad_s, "fig3c largest precession mismatch (rad/s)");
    knobs.add(fig, "figure", "tau-points", grid3c.tau_points, "fig3c lifetime samples");
    knobs.add(fig, "figure", "dw-points", grid3c.dw_points, "fig3c mismatch samples");
    knobs.add(fig, "figure", "eta", eta, "rates combined efficiency, preset value if unset");
    knobs.add_flag(fig, "figure", "modelled", modelled, "rates: add durations modelled from synthesized gates");

    // verify
    double inject_b = NAN;
    int verify_trials = 300;
    auto* ver = app.add_subcommand("verify", "run the three-rail column trace and the invariant suite");
    knobs.add(ver, "verify", "inject-b", inject_b, "bath strength (rad/s) forced into the protocol check");
    knobs.add(ver, "verify", "trials", verify_trials, "trajectories per noisy check");

    // rate
    int photons = 10;
    double duration_us = 3, rate_eta = NAN;
    auto* rate = app.add_subcommand("rate", "generation rate for one cluster");
    knobs.add(rate, "rate", "photons", photons, "photons per cluster");
    knobs.add(rate, "rate", "duration-us", duration_us, "scheme duration (us)");
    knobs.add(rate, "rate", "eta", rate_eta, "combined efficiency, preset value if unset");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? 0 : kExitUsage;
    }

    const PresetCatalog catalog = PresetCatalog::load_default();
    const int workers = g.resolved_workers();
    SynthesisCache cache;

    auto effective = [&](const std::string& scope) { return knobs.effective(scope); };

    if (*syn) {
      const Preset& preset = catalog.runnable(g.preset);
      const SpinSystemParams p = g.params(preset);
      SynthesisOptions o = synthesis_options(threshold, restarts, g.seed, workers);
      o.max_k = max_k;
      const SynthesisReport r = synthesize(target, p, o);
      emit(g, to_text({target, p, r.sequence, r.unitary_fidelity}));
      std::cerr << "target " << target << "\nk " << r.sequence.k() << "\nduration_us "
                << format_cell(r.sequence.total_duration() * 1e6) << "\nfidelity " << format_cell(r.unitary_fidelity)
                << "\nthreshold " << format_cell(threshold) << "\n";
      if (r.below_threshold) throw CheckFailure(target + " is below the fidelity threshold");
      return 0;
    }

    if (*runc) {
      const Preset& preset = catalog.runnable(g.preset);
      ProtocolSpec spec;
      spec.m = m;
      spec.n = n;
      spec.params = g.params(preset);
      spec.trials = ideal ? 1 : trials;
      spec.workers = workers;
      spec.schedule = g.style();
      const double t2 = std::isfinite(t2_us) ? t2_us * 1e-6 : preset.t2_s;
      if (!ideal) {
        spec.library = build_gate_library(protocol_gates(spec.params, synthesis_options(kProtocolGateThreshold, proto_restarts, g.seed, workers), cache));
        spec.noise = bath_for(t2, preset.t2_star_ratio, g.seed);
      }
      const ProtocolResult r = run(spec);
      CsvTable t("run", {{"m", "rails"},
                         {"n", "columns"},
                         {"t2_us", "Hahn-echo T2 (us), 0 for the ideal run"},
                         {"wall_clock_us", "modelled protocol duration (us)"},
                         {"fidelity", "cluster-state fidelity"},
                         {"stderr", "standard error of the fidelity"},
                         {"branch_probability", "mean probability of the uncorrected completion branch"},
                         {"trajectories", "noise trajectories"}});
      t.add_row({static_cast<long long>(m), static_cast<long long>(n), ideal ? 0.0 : t2 * 1e6, r.wall_clock_model * 1e6,
                 r.fidelity, r.fidelity_stderr, r.branch_probability, static_cast<long long>(r.trajectories)});
      emit(g, t.str(effective("run"), g.seed));
      return 0;
    }

    if (*fig) {
      SweepOptions so;
      so.synthesis = synthesis_options(kProtocolGateThreshold, fig_restarts, g.seed, workers);
      so.trials = fig_trials;
      so.workers = workers;
      so.seed = g.seed;
      const KeyValueConfig cfg = effective("figure");
      if (figure == "fig3c") {
        grid3c.tau_min_s = tau_min_ns * 1e-9;
        grid3c.tau_max_s = tau_max_ns * 1e-9;
        emit(g, fig3c_table(grid3c).str(cfg, g.seed));
        return 0;
      }
      const Preset& preset = catalog.runnable(g.preset);
      const SpinSystemParams p = g.params(preset);
      so.t2_star_ratio = preset.t2_star_ratio;
      if (figure == "fig3a") {
        std::vector<Fig3aPoint> pts;
        const auto field = field_grid(fig_bx, fig_bz);
        for (double a : fig_a_mhz)
          for (double t2 : fig_t2_us) {
            pts.push_back(fig3a_point(p, a * 1e6, t2 * 1e-6, field, so, cache));
            std::cerr << "fig3a A=" << format_cell(a) << " MHz T2=" << format_cell(t2) << " us F=" << format_cell(pts.back().fidelity)
                      << "\n";
          }
        emit(g, fig3a_table(pts).str(cfg, g.seed));
      } else if (figure == "fig3b") {
        std::vector<double> t2s;
        for (double t : fig3b_t2_us) t2s.push_back(t * 1e-6);
        const GateLibrary lib = build_gate_library(protocol_gates(p, so.synthesis, cache));
        emit(g, fig3b_table(fig3b_series(p, lib, t2s, so, photon_gate), max_columns).str(cfg, g.seed));
      } else {
        std::optional<GateLibrary> lib;
        if (modelled) lib = build_gate_library(protocol_gates(p, so.synthesis, cache));
        emit(g, rates_table(default_rate_cases(), std::isfinite(eta) ? eta : preset.eta_combined, lib).str(cfg, g.seed));
      }
      return 0;
    }

    if (*ver) {
      VerifyOptions vo;
      vo.seed = g.seed;
      vo.workers = workers;
      vo.trials = verify_trials;
      if (std::isfinite(inject_b)) vo.injected_b_rad_s = inject_b;
      const VerifyReport r = run_invariant_suite(vo);
      emit(g, r.text());
      return r.all_passed() ? 0 : kExitCheck;
    }

    if (*rate) {
      const Preset& preset = catalog.get(g.preset);
      const double e = std::isfinite(rate_eta) ? rate_eta : preset.eta_combined;
      emit(g, rates_table({{"custom", 1, photons, duration_us * 1e-6}}, e).str(effective("rate"), g.seed));
      return 0;
    }
    return kExitUsage;
  } catch (const CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCheck;
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
}
