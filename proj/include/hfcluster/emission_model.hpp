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

// Spin-photon entanglement degraded by precession in the excited state.
// The emission time t is exponential with mean tau; the pair ends up in
// (|0 g0> + e^{i dw t} |1 g1>)/sqrt(2). Averaging over t leaves coherence
// c = 1/(1 - i x) with x = dw tau.

#pragma once

#include "hfcluster/quantum_core.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <optional>
#include <stdexcept>

namespace hfcluster {

/// Bohr magneton over hbar, rad s^-1 T^-1.
inline constexpr double kBohrOverHbar = 8.7941e10;

enum class FrequencyUnit { RadPerSecond, Hertz };

struct EmissionParams {
  double tau_s = 1.7e-9;
  double delta_omega = 3e9;  // in `unit`
  FrequencyUnit unit = FrequencyUnit::RadPerSecond;
  std::optional<double> delta_g;  // alternative route: dw = delta_g muB |B| / hbar
  std::optional<double> b_mag_t;

  double delta_omega_rad_s() const { return unit == FrequencyUnit::Hertz ? kTwoPi * delta_omega : delta_omega; }
  double product() const { return delta_omega_rad_s() * tau_s; }

  static EmissionParams from_g_factor(double tau_s, double delta_g, double b_mag_t) {
    EmissionParams p;
    p.tau_s = tau_s;
    p.delta_g = delta_g;
    p.b_mag_t = b_mag_t;
    p.delta_omega = std::abs(delta_g) * kBohrOverHbar * b_mag_t;
    p.unit = FrequencyUnit::RadPerSecond;
    return p;
  }

  void validate() const {
    if (!(tau_s > 0)) throw std::invalid_argument("excited-state lifetime must be positive");
    if (!(delta_omega >= 0)) throw std::invalid_argument("precession mismatch must be non-negative");
    if (delta_g.has_value() != b_mag_t.has_value()) throw std::invalid_argument("delta_g and |B| must be given together");
    if (delta_g) {
      const double expect = std::abs(*delta_g) * kBohrOverHbar * *b_mag_t;
      if (std::abs(expect - delta_omega_rad_s()) > 1e-9 * std::max(1.0, expect))
        throw std::invalid_argument("delta_omega inconsistent with delta_g and |B|");
    }
  }
};

/// Time-averaged coherence E[e^{i x u}], u ~ Exp(1), by adaptive
/// Gauss-Kronrod quadrature on quarter-period panels. When a period P is
/// shorter than the integration range, the integral over [0, inf) is the
/// one-period integral divided by 1 - e^{-P}.
inline cplx averaged_phase_numeric(double x) {
  using boost::math::quadrature::gauss_kronrod;
  constexpr double kUpper = 60;  // e^-60 tail is below double precision
  const double period = x > 0 ? kTwoPi / x : kUpper;
  const bool periodic = period < kUpper;
  const double upper = periodic ? period : kUpper;
  const int panels = periodic ? 4 : static_cast<int>(upper / 4);
  const double width = upper / panels;
  double re = 0, im = 0;
  for (int i = 0; i < panels; ++i) {
    const double a = i * width, b = (i + 1) * width;
    re += gauss_kronrod<double, 31>::integrate([x](double u) { return std::exp(-u) * std::cos(x * u); }, a, b, 8, 1e-13);
    im += gauss_kronrod<double, 31>::integrate([x](double u) { return std::exp(-u) * std::sin(x * u); }, a, b, 8, 1e-13);
  }
  const double scale = periodic ? -1 / std::expm1(-period) : 1.0;
  return {re * scale, im * scale};
}

inline cplx averaged_phase_closed(double x) { return 1.0 / cplx(1.0, -x); }

namespace detail {

inline DensityMatrix spin_photon_state(cplx c) {
  CMatrix rho = CMatrix::Zero(4, 4);
  rho(0, 0) = 0.5;
  rho(3, 3) = 0.5;
  rho(3, 0) = 0.5 * c;
  rho(0, 3) = 0.5 * std::conj(c);
  return DensityMatrix(Register({QubitRole::electron(), QubitRole::photon(0)}), rho);
}

}  // namespace detail

/// Spin (x) photon density matrix averaged over the emission time (quadrature).
inline DensityMatrix dephased_state(const EmissionParams& p) {
  p.validate();
  return detail::spin_photon_state(averaged_phase_numeric(p.product()));
}

inline DensityMatrix dephased_state_closed(const EmissionParams& p) {
  p.validate();
  return detail::spin_photon_state(averaged_phase_closed(p.product()));
}

/// Closed form of max_pure_fidelity(dephased_state): sqrt((1 + |c|)/2).
inline double emission_fidelity(double x) {
  if (!(x >= 0)) throw std::invalid_argument("dw tau must be non-negative");
  if (std::isinf(x)) return std::sqrt(0.5);
  return std::sqrt(0.5 * (1 + 1 / std::sqrt(1 + x * x)));
}

inline double emission_fidelity(const EmissionParams& p) {
  p.validate();
  return emission_fidelity(p.product());
}

inline double emission_fidelity_numeric(const EmissionParams& p) { return max_pure_fidelity(dephased_state(p)); }

/// Fidelity ceiling for colour encoding, where resolving the two lines
/// needs dw tau of at least 2 pi.
inline double colour_encoding_floor() { return emission_fidelity(kTwoPi); }

inline double colour_encoding_floor(const EmissionParams& p) {
  p.validate();
  return colour_encoding_floor();
}

}  // namespace hfcluster
