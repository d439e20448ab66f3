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


#include "hfcluster/noise_bath.hpp"
#include "hfcluster/spin_hamiltonian.hpp"

#include <gtest/gtest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <vector>

namespace hfcluster {
namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

TEST(OuFromCoherence, RoundTripRecoversInputs) {
  const OUNoise n = ou_from_coherence(3e-6, 300e-6);
  EXPECT_NEAR(n.t2_star(), 3e-6, 1e-18);
  EXPECT_NEAR(n.t2_hahn(), 300e-6, 1e-15);
  EXPECT_DOUBLE_EQ(n.b_rad_s, std::sqrt(2.0) / 3e-6);
}

TEST(OuFromCoherence, DoublingT2StarHalvesB) {
  const OUNoise a = ou_from_coherence(2e-6, 300e-6), b = ou_from_coherence(4e-6, 300e-6);
  EXPECT_NEAR(b.b_rad_s, a.b_rad_s / 2, 1e-9 * a.b_rad_s);
}

TEST(OuFromCoherence, RejectsNonPhysicalOrdering) {
  EXPECT_THROW(ou_from_coherence(5e-6, 5e-6), std::invalid_argument);
  EXPECT_THROW(ou_from_coherence(0, 5e-6), std::invalid_argument);
}

TEST(OuNoise, ValidatesStep) {
  OUNoise n;
  n.b_rad_s = 1e5;
  n.tau_c_s = 1e-6;
  n.dt_s = 2e-7;
  EXPECT_THROW(n.validate(), std::invalid_argument);
  n.dt_s = 0;
  EXPECT_NO_THROW(n.validate());
  EXPECT_DOUBLE_EQ(n.step(), 1e-6 / 50);
  EXPECT_DOUBLE_EQ(n.with_default_step(1e-8).step(), 1e-8 / 20);
  n.b_rad_s = -1;
  EXPECT_THROW(n.validate(), std::invalid_argument);
}

class TrajectoryStatistics : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    noise_.b_rad_s = 2e5;
    noise_.tau_c_s = 1e-6;
    noise_.dt_s = 1e-8;
    noise_.seed = 11;
    // 1e6 samples spanning 1e4 correlation times.
    traj_ = sample_trajectory(noise_, 1e6 * noise_.dt_s * (1 - 1e-9));
  }
  static OUNoise noise_;
  static NoiseTrajectory traj_;
};
OUNoise TrajectoryStatistics::noise_;
NoiseTrajectory TrajectoryStatistics::traj_;

TEST_F(TrajectoryStatistics, MeanIsZeroWithinThreeStandardErrors) {
  const auto& s = traj_.samples();
  ASSERT_GE(s.size(), 1000000u);
  double mean = 0;
  for (double x : s) mean += x;
  mean /= static_cast<double>(s.size());
  // Correlated samples: effective count is N dt / (2 tau_c).
  const double n_eff = static_cast<double>(s.size()) * noise_.dt_s / (2 * noise_.tau_c_s);
  EXPECT_LT(std::abs(mean), 3 * noise_.b_rad_s / std::sqrt(n_eff));
}

TEST_F(TrajectoryStatistics, VarianceMatchesStationaryDeviation) {
  const auto& s = traj_.samples();
  double var = 0;
  for (double x : s) var += x * x;
  var /= static_cast<double>(s.size());
  EXPECT_NEAR(var / (noise_.b_rad_s * noise_.b_rad_s), 1.0, 0.02);
}

TEST_F(TrajectoryStatistics, AutocorrelationAtTauC) {
  const auto& s = traj_.samples();
  const auto lag = static_cast<size_t>(std::lround(noise_.tau_c_s / noise_.dt_s));
  double c = 0;
  for (size_t k = 0; k + lag < s.size(); ++k) c += s[k] * s[k + lag];
  c /= static_cast<double>(s.size() - lag);
  EXPECT_NEAR(c / (noise_.b_rad_s * noise_.b_rad_s * std::exp(-1.0)), 1.0, 0.05);
}

TEST(SampleTrajectory, SameSeedIsBitwiseIdentical) {
  const OUNoise n = ou_from_coherence(1e-6, 20e-6, 5, 1e-8);
  const auto a = sample_trajectory(n, 2e-6, 3), b = sample_trajectory(n, 2e-6, 3), c = sample_trajectory(n, 2e-6, 4);
  EXPECT_EQ(a.samples(), b.samples());
  EXPECT_NE(a.samples(), c.samples());
}

TEST(SampleTrajectory, RejectsNonPositiveDuration) {
  EXPECT_THROW(sample_trajectory(ou_from_coherence(1e-6, 20e-6), 0), std::invalid_argument);
}

TEST(NoiseTrajectory, IntegralOfPiecewiseConstantPath) {
  const NoiseTrajectory t(1.0, {1.0, 2.0, 4.0});
  EXPECT_DOUBLE_EQ(t.integrate(0, 3), 7.0);
  EXPECT_DOUBLE_EQ(t.integrate(0.5, 1.5), 1.5);
  EXPECT_THROW(t.require_covers(3.5), std::out_of_range);
}

TEST(ApplyNoiseSegment, ZeroNoiseMatchesNoiselessEvolution) {
  SpinSystemParams p;
  const CMatrix h = rotating_hamiltonian(p, RotatingFrameParams{0}, true);
  OUNoise n;
  n.b_rad_s = 0;
  n.tau_c_s = 1e-6;
  const auto traj = sample_trajectory(n, 1e-6);
  const Register reg = Register::spins(1);
  const PureState psi = apply_gate(PureState::all(reg, 0), gates::Ry(0.7), {0});
  const int targets[] = {0, 1};
  const PureState a = apply_noise_segment(psi, traj, 0, h, 0.4e-6, targets);
  const PureState b = apply_gate(psi, Unitary(propagator(h, 0.4e-6)), targets);
  EXPECT_LT((a.amplitudes() - b.amplitudes()).norm(), 1e-10);
}

TEST(ApplyNoiseSegment, SigmaZEigenstatesKeepPopulations) {
  // No hyperfine coupling: electron Zeeman offset plus a driven nucleus.
  CMatrix h = CMatrix::Zero(4, 4);
  h.diagonal() << 2e6, 2e6, -2e6, -2e6;
  h += Eigen::kroneckerProduct(CMatrix::Identity(2, 2), gates::pauli_x()).eval() * 5e5;
  const OUNoise n = ou_from_coherence(0.2e-6, 5e-6, 9, 1e-9);
  const auto traj = sample_trajectory(n, 1e-6);
  const int targets[] = {0, 1};
  for (int bit : {0, 1}) {
    const Register reg = Register::spins(1);
    const PureState psi = PureState::all(reg, bit);
    const PureState out = apply_noise_segment(psi, traj, 0, h, 0.9e-6, targets);
    const double p_electron_one = out.amplitudes().tail(2).squaredNorm();
    EXPECT_NEAR(p_electron_one, bit, 1e-10);
  }
}

TEST(ApplyNoiseSegment, RejectsShortTrajectory) {
  const OUNoise n = ou_from_coherence(1e-6, 20e-6, 1, 1e-8);
  const auto traj = sample_trajectory(n, 1e-7);
  const int targets[] = {0};
  const PureState psi = PureState::all(Register::spins(0), 0);
  EXPECT_THROW(apply_noise_segment(psi, traj, 0, CMatrix::Zero(2, 2), 1e-6, targets), std::out_of_range);
}

TEST(CoherenceOracle, FreeInductionFitsGaussianT2Star) {
  const OUNoise n = ou_from_coherence(3e-6, 300e-6, 21, 1e-8);
  const auto times = linspace(0.2e-6, 7e-6, 35);
  const auto c = simulate_coherence(n, times, 2000, CoherenceExperiment::FreeInduction);
  EXPECT_NEAR(fit_decay_time(c, 2) / n.t2_star(), 1.0, 0.05);
}

TEST(CoherenceOracle, HahnEchoRecoversT2) {
  const double t2 = 300e-6;
  const OUNoise n = ou_from_coherence(0.01 * t2, t2, 23, 0.5e-6);
  const auto times = linspace(20e-6, 500e-6, 25);
  const auto c = simulate_coherence(n, times, 2000, CoherenceExperiment::HahnEcho);
  EXPECT_NEAR(fit_decay_time(c, 3) / t2, 1.0, 0.10);
}

TEST(CoherenceOracle, QuasiStaticLimitIsGaussian) {
  OUNoise n;
  n.b_rad_s = 1e6;
  n.tau_c_s = 10;
  n.dt_s = 1e-8;
  const auto times = linspace(0.1e-6, 4e-6, 40);
  const auto c = simulate_coherence(n, times, 4000, CoherenceExperiment::FreeInduction);
  double rms = 0;
  for (size_t i = 0; i < times.size(); ++i) {
    const double d = c.signal[i] - std::exp(-std::pow(times[i] / n.t2_star(), 2));
    rms += d * d;
  }
  EXPECT_LT(std::sqrt(rms / static_cast<double>(times.size())), 0.02);
}

TEST(CoherenceOracle, EchoOutlivesFreeInduction) {
  for (auto [b, tc] : {std::pair{1e6, 1e-5}, std::pair{2e6, 1e-4}, std::pair{5e5, 1e-6}}) {
    OUNoise n;
    n.b_rad_s = b;
    n.tau_c_s = tc;
    n.dt_s = std::min(tc / 50, 1e-8);
    const std::vector<double> t{1.0 / b, 2.0 / b};
    const auto fid = simulate_coherence(n, t, 1000, CoherenceExperiment::FreeInduction);
    const auto echo = simulate_coherence(n, t, 1000, CoherenceExperiment::HahnEcho);
    for (size_t i = 0; i < t.size(); ++i) EXPECT_GT(echo.signal[i], fid.signal[i]) << "b=" << b << " tau_c=" << tc;
  }
}

}  // namespace
}  // namespace hfcluster
