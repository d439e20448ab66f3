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


#include "hfcluster/cluster_protocol.hpp"
#include "hfcluster/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace hfcluster {
namespace {

std::vector<std::string> labels(const std::vector<ScheduleStep>& s) {
  std::vector<std::string> out;
  for (const auto& st : s) out.push_back(st.label());
  return out;
}

int count_kind(const std::vector<ScheduleStep>& s, StepKind k) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [k](const ScheduleStep& x) { return x.kind == k; }));
}

int count_gate(const std::vector<ScheduleStep>& s, const std::string& g) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](const ScheduleStep& x) { return x.kind == StepKind::Gate && x.gate == g; }));
}

PureState plus_electron() { return apply_gate(PureState::all(Register::spins(0), 0), gates::Ry(kPi / 2), {0}); }

TEST(BuildSchedule, TwoRailsOneColumnEmitsTwoPhotons) {
  const auto s = build_schedule(2, 1);
  EXPECT_EQ(count_kind(s, StepKind::Emit), 2);
  EXPECT_EQ(count_kind(s, StepKind::Measure), 1);
  EXPECT_EQ(s.back().kind, StepKind::Measure);
}

TEST(BuildSchedule, ZeroColumnsIsPreparationOnly) {
  const auto s = build_schedule(3, 0);
  EXPECT_EQ(count_kind(s, StepKind::Emit), 0);
  EXPECT_EQ(count_kind(s, StepKind::Measure), 0);
  for (const auto& st : s) EXPECT_EQ(st.stage, Stage::Preparation);
}

TEST(BuildSchedule, ThreeRailColumnFollowsTheStageList) {
  const std::vector<std::string> expected{
      "Ry_1",      "SWAP_12", "Ry_1",    "SWAP_12",   "SWAP_13", "Ry_1",    "SWAP_13",  // preparation
      "CZ_12",     "CZ_13",                                                             // entanglement
      "SWAP_12",   "emit_2->p0", "SWAP_12", "emit_1->p1", "SWAP_13", "emit_3->p2", "SWAP_13",  // emission
      "SWAP_12",   "Ry_1",    "SWAP_12", "Ry_1",      "SWAP_13", "Ry_1",    "SWAP_13",  // rotation
      "measure_z"};
  EXPECT_EQ(labels(build_schedule(3, 1)), expected);
}

TEST(BuildSchedule, CompactStyleKeepsPhotonOrderWithFewerSwaps) {
  const auto step = build_schedule(2, 2), compact = build_schedule(2, 2, ScheduleStyle::Compact);
  EXPECT_EQ(count_gate(step, "swap"), 10);
  EXPECT_EQ(count_gate(compact, "swap"), 5);
  EXPECT_EQ(count_gate(step, "cz"), 2);
  EXPECT_EQ(count_gate(compact, "cz"), 2);
  std::vector<std::pair<int, int>> a, b;
  for (const auto& st : step)
    if (st.kind == StepKind::Emit) a.emplace_back(st.wires[0], st.photon);
  for (const auto& st : compact)
    if (st.kind == StepKind::Emit) b.emplace_back(st.wires[0], st.photon);
  EXPECT_EQ(a, b);
}

TEST(BuildSchedule, RejectsBadShapes) {
  EXPECT_THROW(build_schedule(1, 1), std::invalid_argument);
  EXPECT_THROW(build_schedule(2, -1), std::invalid_argument);
}

TEST(BuildSchedule, WallClockSumsGateDurations) {
  GateLibrary lib = GateLibrary::ideal();
  lib.set_sequence("swap", DDSequence{{0.1e-6}, {ElectronGate::I, ElectronGate::I}});
  lib.set_sequence("cz", DDSequence{{0.05e-6}, {ElectronGate::I, ElectronGate::I}});
  // 10 SWAPs of 0.4 us and 2 CZs of 0.2 us; Ry is instantaneous.
  EXPECT_NEAR(wall_clock_model(build_schedule(2, 2), lib), 4.4e-6, 1e-15);
}

TEST(ProtocolSpec, MissingGateIsRejected) {
  ProtocolSpec s;
  GateLibrary lib;
  lib.set_ideal("swap", gates::SWAP().matrix());
  lib.set_ideal("ry", gates::Ry(kPi / 2).matrix());
  s.library = lib;
  EXPECT_THROW(run(s), std::invalid_argument);
}

TEST(ProtocolSpec, NoiseNeedsPulseSequences) {
  ProtocolSpec s;
  s.noise = ou_from_coherence(3e-6, 300e-6);
  EXPECT_THROW(run(s), std::invalid_argument);
}

TEST(EmitPhoton, GroundElectronGivesProductState) {
  const PureState out = emit_photon(PureState::all(Register::spins(0), 0));
  ASSERT_EQ(out.qubits(), 2);
  EXPECT_NEAR(std::abs(out.amplitudes()(0)), 1.0, 1e-15);
}

TEST(EmitPhoton, SuperposedElectronGivesBellPair) {
  const PureState out = emit_photon(plus_electron());
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NEAR(out.amplitudes()(0).real(), h, 1e-15);
  EXPECT_NEAR(out.amplitudes()(3).real(), h, 1e-15);
  EXPECT_NEAR(entropy_bits(partial_trace(out, {1})), 1.0, 1e-12);
}

TEST(EmitPhoton, TwoEmissionsGiveGhz) {
  const PureState out = emit_photon(emit_photon(plus_electron()));
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(out.amplitudes()(0)), h, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitudes()(7)), h, 1e-15);
  EXPECT_NEAR(out.amplitudes().segment(1, 6).norm(), 0, 1e-15);
}

TEST(IdealTarget, TwoRailsOneColumnIsMaximallyEntangled) {
  const PureState t = ideal_target(2, 1);
  EXPECT_EQ(t.qubits(), 2);
  EXPECT_NEAR(t.amplitudes().norm(), 1.0, 1e-12);
  EXPECT_NEAR(entropy_bits(partial_trace(t, {0})), 1.0, 1e-9);
}

TEST(IdealTarget, ThreeRailsOneColumnIsLinearCluster) {
  const auto lu = lu_equivalence(ideal_target(3, 1), linear_cluster(3));
  EXPECT_TRUE(lu.equivalent) << lu.overlap;
}

TEST(IdealTarget, PhotonOnlyAndSizeLimited) {
  const PureState t = ideal_target(2, 3);
  EXPECT_EQ(t.qubits(), 6);
  for (int w = 0; w < t.qubits(); ++w) EXPECT_EQ(t.reg()[w].kind, RoleKind::Photon);
  EXPECT_THROW(ideal_target(2, 7), std::invalid_argument);
  EXPECT_THROW(ideal_target(2, 0), std::invalid_argument);
}

TEST(Run, NoiselessIdealGatesAreExact) {
  for (auto style : {ScheduleStyle::Stepwise, ScheduleStyle::Compact})
    for (int m : {2, 3})
      for (int n : {1, 2, 3})
        for (auto mode : {CompletionMode::Corrected, CompletionMode::PostSelect}) {
          ProtocolSpec s;
          s.m = m;
          s.n = n;
          s.schedule = style;
          s.completion = mode;
          EXPECT_NEAR(run(s).fidelity, 1.0, 1e-9) << m << "x" << n;
        }
}

TEST(Run, InitialOnesAlsoExact) {
  ProtocolSpec s;
  s.initial_bit = 1;
  EXPECT_NEAR(run(s).fidelity, 1.0, 1e-9);
  s.initial_bit = 2;
  EXPECT_THROW(run(s), std::invalid_argument);
}

TEST(Run, PreparationOnlyComparesSpins) {
  ProtocolSpec s;
  s.n = 0;
  const auto r = run(s);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_EQ(r.wall_clock_model, 0.0);
}

TEST(Run, KeptStateIsTheTarget) {
  ProtocolSpec s;
  s.keep_state = true;
  const auto r = run(s);
  ASSERT_TRUE(r.photonic_state.has_value());
  EXPECT_NEAR(state_fidelity(*r.photonic_state, ideal_target(2, 2)), 1.0, 1e-9);
  EXPECT_NEAR(r.branch_probability, 0.25, 1e-9);
}

TEST(Completion, EveryCorrectedBranchMatchesTheTarget) {
  for (int m : {2, 3}) {
    const int n = 2;
    const detail::CircuitRunner runner(GateLibrary::ideal(), SpinSystemParams{});
    CVector amp = detail::spin_basis_state(m, 0);
    int nq = m;
    double t = 0;
    runner.run(amp, nq, build_schedule(m, n), nullptr, t);
    const CVector ref = ideal_target(m, n).amplitudes();
    for (size_t s = 0; s < dim_of(m); ++s) {
      const CVector v = detail::completion_branch(amp, m, n, s, true);
      EXPECT_NEAR(std::norm(ref.dot(v)) / v.squaredNorm(), 1.0, 1e-9) << "outcome " << s;
    }
  }
}

TEST(LuEquivalence, Examples) {
  const PureState c = linear_cluster(3);
  const auto self = lu_equivalence(c, c);
  EXPECT_TRUE(self.equivalent);
  EXPECT_NEAR(self.overlap, 1.0, 1e-12);

  const PureState rotated = apply_gate(apply_gate(c, gates::X(), {0}), gates::Z(), {2});
  EXPECT_TRUE(lu_equivalence(rotated, c).equivalent);

  CVector g = CVector::Zero(8);
  g(0) = g(7) = 1 / std::sqrt(2.0);
  const PureState ghz(Register::photons(3), g);
  const auto lu = lu_equivalence(ghz, c);
  EXPECT_TRUE(lu.equivalent) << lu.overlap;

  const PureState product = PureState::all(Register::photons(3), 0);
  const auto no = lu_equivalence(product, c);
  EXPECT_FALSE(no.prefilter_passed);
  EXPECT_FALSE(no.equivalent);
  EXPECT_THROW(lu_equivalence(linear_cluster(7), linear_cluster(7)), std::invalid_argument);
}

TEST(ColumnTrace, ThreeRailColumnIsLinearCluster) {
  const ColumnTrace rep = trace_three_rail_column();
  EXPECT_TRUE(rep.passed);
  EXPECT_GT(rep.lu.overlap, 1 - 1e-6);
  EXPECT_GT(rep.branch_probability, 0);
  for (const auto& s : rep.steps) EXPECT_NEAR(s.norm, 1.0, 1e-12) << s.label;
  EXPECT_EQ(rep.steps.front().label, "init");
  EXPECT_EQ(rep.steps.front().state, "+1.0000|111>");
  // One row per schedule step before the measurement, plus init and the branch.
  EXPECT_EQ(rep.steps.size(), build_schedule(3, 1).size() + 1);
}

TEST(ColumnTrace, TimeBinLabels) {
  const ColumnTrace rep = trace_three_rail_column(PhotonEncoding::TimeBin);
  EXPECT_TRUE(rep.passed);
  EXPECT_NE(rep.steps.back().state.find('e'), std::string::npos);
}

// Synthesized gates at the working point, shared by the noisy checks.
class SynthesizedLibrary : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    SynthesisCache cache;
    lib_ = new GateLibrary(build_gate_library(synthesize_swap_cz(SpinSystemParams{}, protocol_synthesis_options(), cache)));
  }
  static void TearDownTestSuite() { delete lib_; }
  static ProtocolSpec spec(int n, double t2_s) {
    ProtocolSpec s;
    s.n = n;
    s.library = *lib_;
    s.noise = bath_for(t2_s, 0.01, 3);
    s.trials = 500;
    return s;
  }
  static const GateLibrary* lib_;
};
const GateLibrary* SynthesizedLibrary::lib_ = nullptr;

TEST_F(SynthesizedLibrary, NoiselessTwoByTwoMeetsGateBound) {
  for (auto style : {ScheduleStyle::Stepwise, ScheduleStyle::Compact}) {
    ProtocolSpec s;
    s.library = *lib_;
    s.schedule = style;
    EXPECT_GE(run(s).fidelity, 0.996);
  }
}

TEST_F(SynthesizedLibrary, FidelityNonIncreasingInLength) {
  double last = 1 + 1e-12;
  for (int n : {1, 2, 3}) {
    const double f = run(spec(n, 2e-6)).fidelity;
    EXPECT_LE(f, last) << "N = " << n;
    last = f;
  }
}

TEST_F(SynthesizedLibrary, WorkingPointFactorsMatchReferenceValues) {
  const FactorFidelities f = factor_fidelities(spec(1, 300e-6));
  EXPECT_NEAR(f.prep, 0.999, 0.001);
  EXPECT_NEAR(f.block, 0.998, 0.001);
}

TEST_F(SynthesizedLibrary, SeededRunIsReproducibleAcrossWorkers) {
  ProtocolSpec a = spec(1, 2e-6);
  a.trials = 64;
  ProtocolSpec b = a;
  b.workers = 3;
  EXPECT_EQ(run(a).fidelity, run(b).fidelity);
}

}  // namespace
}  // namespace hfcluster
