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

// System presets loaded from data/presets.cfg (format hfcluster-presets/1).

#pragma once

#include "hfcluster/config.hpp"
#include "hfcluster/spin_hamiltonian.hpp"

#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#ifndef HFCLUSTER_DEFAULT_PRESET_DIR
#define HFCLUSTER_DEFAULT_PRESET_DIR "data"
#endif

namespace hfcluster {

inline constexpr const char* kPresetFormat = "hfcluster-presets/1";
inline constexpr const char* kPresetDirEnv = "HFCLUSTER_PRESET_DIR";

class PresetError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

struct Preset {
  std::string name;
  std::string kind;  // "simulation" or "catalog"
  std::string description;
  SpinSystemParams params;
  double t2_s = 300e-6;
  double t2_star_ratio = 0.01;
  double lifetime_s = 1.7e-9;
  double delta_omega_rad_s = 3e9;
  double eta_combined = 0.85;
  KeyValueConfig raw;  // every field of the entry, prefix stripped

  bool runnable() const { return kind == "simulation"; }
};

class PresetCatalog {
 public:
  static PresetCatalog parse(const KeyValueConfig& cfg) {
    if (cfg.str("format", "") != kPresetFormat) throw PresetError("preset file must declare format = " + std::string(kPresetFormat));
    PresetCatalog cat;
    std::set<std::string> names;
    for (const auto& k : cfg.keys()) {
      const auto dot = k.find('.');
      if (dot != std::string::npos) names.insert(k.substr(0, dot));
    }
    for (const auto& name : names) cat.presets_.push_back(build(name, cfg.section(name + ".")));
    return cat;
  }

  static PresetCatalog load(const std::string& path) { return parse(KeyValueConfig::load(path)); }

  /// $HFCLUSTER_PRESET_DIR/presets.cfg, else the build-time data directory.
  static std::string default_path() {
    const char* env = std::getenv(kPresetDirEnv);
    const std::string dir = env && *env ? env : HFCLUSTER_DEFAULT_PRESET_DIR;
    return (std::filesystem::path(dir) / "presets.cfg").string();
  }

  static PresetCatalog load_default() { return load(default_path()); }

  const Preset& get(const std::string& name) const {
    for (const auto& p : presets_)
      if (p.name == name) return p;
    throw PresetError("unknown preset '" + name + "'");
  }

  const Preset& runnable(const std::string& name) const {
    const Preset& p = get(name);
    if (!p.runnable()) throw PresetError("preset '" + name + "' is catalog-only and has no Hamiltonian parameters");
    return p;
  }

  const std::vector<Preset>& all() const { return presets_; }

 private:
  static Preset build(const std::string& name, const KeyValueConfig& c) {
    Preset p;
    p.name = name;
    p.raw = c;
    p.kind = c.str("kind", "catalog");
    if (p.kind != "simulation" && p.kind != "catalog") throw PresetError("preset '" + name + "' has unknown kind " + p.kind);
    p.description = c.str("description", "");
    if (p.kind == "simulation") {
      auto& s = p.params;
      s.a_par_hz = c.num("a_par_hz");
      s.a_perp_hz = c.num("a_perp_hz", s.a_par_hz);
      s.gamma_n_hz_per_t = c.num("gamma_n_hz_per_t");
      s.gamma_e_hz_per_t = c.num("gamma_e_hz_per_t");
      s.b_t = Vec3(c.num("b_x_t"), c.num("b_y_t", 0.0), c.num("b_z_t"));
      s.lambda_so_hz = c.num("lambda_so_hz", s.lambda_so_hz);
      s.validate();
      p.t2_s = c.num("t2_s", p.t2_s);
      p.t2_star_ratio = c.num("t2_star_ratio", p.t2_star_ratio);
      p.lifetime_s = c.num("lifetime_s", p.lifetime_s);
      p.delta_omega_rad_s = c.num("delta_omega_rad_s", p.delta_omega_rad_s);
      p.eta_combined = c.num("eta_combined", p.eta_combined);
    }
    return p;
  }

  std::vector<Preset> presets_;
};

}  // namespace hfcluster
