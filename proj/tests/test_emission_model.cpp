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


#include "hfcluster/emission_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

namespace hfcluster {
namespace {

EmissionParams emission(double tau_s, double dw, FrequencyUnit unit = FrequencyUnit::RadPerSecond) {
  EmissionParams p;
  p.tau_s = tau_s;
  p.delta_omega = dw;
  p.unit = unit;
  return p;
}

TEST(DephasedState, NoMismatchIsMaximallyEntangled) {
  const DensityMatrix rho = dephased_state(emission(1.7e-9, 0));
  EXPECT_NEAR(std::abs(rho.matrix()(0, 3)), 0.5, 1e-12);
  EXPECT_NEAR(max_pure_fidelity(rho), 1.0, 1e-12);
}

TEST(DephasedState, LargeMismatchLosesCoherence) {
  const DensityMatrix rho = dephased_state(emission(1e-9, 1e13));
  EXPECT_LT(std::abs(rho.matrix()(0, 3)), 1e-3);
  EXPECT_NEAR(rho.matrix()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(rho.matrix()(3, 3).real(), 0.5, 1e-15);
}

TEST(DephasedState, OffDiagonalMatchesClosedForm) {
  for (double x : {0.0, 0.3, 1.0, 5.1, 17.0, 100.0}) {
    const DensityMatrix rho = dephased_state(emission(1e-9, x / 1e-9));
    EXPECT_NEAR(std::abs(rho.matrix()(3, 0)), 1 / (2 * std::sqrt(1 + x * x)), 1e-8) << "x = " << x;
  }
}

TEST(EmissionFidelity, Limits) {
  EXPECT_DOUBLE_EQ(emission_fidelity(0.0), 1.0);
  EXPECT_NEAR(emission_fidelity(std::numeric_limits<double>::infinity()), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(emission_fidelity(1e9), std::sqrt(0.5), 1e-9);
  EXPECT_THROW(emission_fidelity(-1.0), std::invalid_argument);
}

TEST(EmissionFidelity, ReferenceLifetimeAndMismatch) {
  // 3e9 rad/s at 1.7 ns: dw tau = 5.1.
  const double f = emission_fidelity(emission(1.7e-9, 3e9));
  EXPECT_NEAR(f, std::sqrt(0.5 * (1 + 1 / std::sqrt(1 + 5.1 * 5.1))), 1e-12);
  EXPECT_NEAR(f, 0.8, 0.05);
  // Reading 3 GHz as an ordinary frequency gives about 0.72.
  EXPECT_NEAR(emission_fidelity(emission(1.7e-9, 3e9, FrequencyUnit::Hertz)), 0.718, 0.001);
}

TEST(EmissionFidelity, NumericPathAgreesWithClosedForm) {
  for (int i = 0; i <= 50; ++i) {
    const double x = 2.0 * i;
    const auto p = emission(1e-9, x / 1e-9);
    EXPECT_NEAR(emission_fidelity_numeric(p), emission_fidelity(p), 1e-8) << "x = " << x;
  }
}

TEST(EmissionFidelity, StrictlyDecreasingInProduct) {
  double last = 2;
  for (int i = 0; i < 20; ++i) {
    const double f = emission_fidelity(0.25 * i);
    EXPECT_LT(f, last);
    last = f;
  }
}

TEST(EmissionFidelity, DependsOnlyOnProduct) {
  for (double a : {2.0, 10.0}) EXPECT_NEAR(emission_fidelity(emission(1.7e-9 / a, 3e9 * a)), emission_fidelity(emission(1.7e-9, 3e9)), 1e-10);
}

TEST(ColourEncodingFloor, ValueAndBounds) {
  EXPECT_NEAR(colour_encoding_floor(), std::sqrt(0.5 * (1 + 1 / std::sqrt(1 + 4 * kPi * kPi))), 1e-15);
  EXPECT_NEAR(colour_encoding_floor(), 0.7607, 1e-4);
  EXPECT_LE(colour_encoding_floor(), emission_fidelity(0.0));
  EXPECT_EQ(colour_encoding_floor(emission(1e-9, 1e9)), colour_encoding_floor(emission(5e-9, 7e9)));
}

TEST(EmissionParams, GFactorRoute) {
  const auto p = EmissionParams::from_g_factor(1.7e-9, 0.02, 1.0);
  EXPECT_NEAR(p.delta_omega_rad_s(), 0.02 * kBohrOverHbar, 1e-3);
  EXPECT_NO_THROW(p.validate());
  EmissionParams bad = p;
  bad.delta_omega *= 1.1;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  EXPECT_THROW(emission(0, 1e9).validate(), std::invalid_argument);
  EXPECT_THROW(emission(1e-9, -1).validate(), std::invalid_argument);
}

}  // namespace
}  // namespace hfcluster
