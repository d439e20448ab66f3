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


#include "hfcluster/budget.hpp"
#include "hfcluster/gate_synthesis.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hfcluster {
namespace {

double phase_free_distance(const CMatrix& a, const CMatrix& b) {
  const cplx ov = (b.adjoint() * a).trace();
  return (a - ov / std::abs(ov) * b).norm();
}

Vec3 rotation_axis(const Mat2c& m) {
  Mat2c u = m / std::sqrt(m.determinant());
  if (u.trace().real() < 0) u = -u;
  return Vec3(-(u(0, 1) + u(1, 0)).imag() / 2, (u(1, 0) - u(0, 1)).real() / 2, -(u(0, 0) - u(1, 1)).imag() / 2).normalized();
}

// Overlap of the nuclear rotation axes conditioned on the electron state.
double conditional_axis_overlap(const Mat4c& u) {
  return rotation_axis(u.topLeftCorner<2, 2>()).dot(rotation_axis(u.bottomRightCorner<2, 2>()));
}

DDSequence repeated(const DDSequence& s, int times) {
  DDSequence out;
  for (int r = 0; r < times; ++r) {
    out.tau_f.insert(out.tau_f.end(), s.tau_f.begin(), s.tau_f.end());
    if (out.electron_gates.empty()) {
      out.electron_gates = s.electron_gates;
    } else {
      // Merge the trailing and leading electron gates into one slot.
      const Mat2c merged = electron_gate_matrix(s.electron_gates.front()) * electron_gate_matrix(out.electron_gates.back());
      bool found = false;
      for (ElectronGate g : kElectronGateMenu)
        if (phase_free_distance(CMatrix(electron_gate_matrix(g)), CMatrix(merged)) < 1e-12) {
          out.electron_gates.back() = g;
          found = true;
        }
      if (!found) throw std::logic_error("merged electron gate outside the menu");
      out.electron_gates.insert(out.electron_gates.end(), s.electron_gates.begin() + 1, s.electron_gates.end());
    }
  }
  return out;
}

TEST(DdUnit, DecoupledSystemActsTriviallyOnNucleus) {
  SpinSystemParams p;
  p.a_par_hz = 1e-6;  // validation needs a positive coupling; effectively zero
  p.a_perp_hz = 0;
  p.b_t = Vec3(0, 0, 0.6);
  const Mat4c u = dd_unit(0.3e-6, secular_hamiltonian(p));
  // Block diagonal in the electron and the same nuclear action on both blocks.
  const double off_block = u.topRightCorner<2, 2>().norm();
  EXPECT_LT(off_block, 1e-9);
  const Mat2c a = u.topLeftCorner<2, 2>(), b = u.bottomRightCorner<2, 2>();
  EXPECT_LT(phase_free_distance(CMatrix(a), CMatrix(b)), 1e-6);
  // Nuclear Zeeman precession over 4 tau_f is undone only up to a z rotation; the
  // electron echo phase is global within each block.
  EXPECT_NEAR(std::abs(a(0, 1)), 0, 1e-12);
}

TEST(DdUnit, UnitaryForRandomSpacings) {
  SpinSystemParams p;
  const Mat4c h = secular_hamiltonian(p);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> tau(1e-9, 2e-6);
  for (int i = 0; i < 20; ++i) {
    const Mat4c u = dd_unit(tau(rng), h);
    EXPECT_LT((u.adjoint() * u - Mat4c::Identity()).norm(), 1e-10);
  }
  EXPECT_THROW(dd_unit(0, h), std::invalid_argument);
}

TEST(DdUnit, ConditionalAxesOpposeAtResonance) {
  SpinSystemParams p;
  const Mat4c h = secular_hamiltonian(p);
  const double res = resonance_tau_f(p, 1, ResonanceKind::Conditional);
  double best_tau = 0, best = 2;
  for (int i = 0; i <= 400; ++i) {
    const double t = res * (0.8 + 0.4 * i / 400.0);
    const double d = conditional_axis_overlap(dd_unit(t, h));
    if (d < best) {
      best = d;
      best_tau = t;
    }
  }
  EXPECT_NEAR(best_tau / res, 1.0, 0.02);
  EXPECT_LT(conditional_axis_overlap(dd_unit(res, h)), conditional_axis_overlap(dd_unit(0.9 * res, h)));
  EXPECT_LT(conditional_axis_overlap(dd_unit(res, h)), conditional_axis_overlap(dd_unit(1.1 * res, h)));
}

TEST(SequenceUnitary, EmptyIsIdentity) {
  SpinSystemParams p;
  EXPECT_LT((sequence_unitary(DDSequence{}, p) - Mat4c::Identity()).norm(), 1e-15);
}

TEST(SequenceUnitary, OneUnitEqualsDdUnit) {
  SpinSystemParams p;
  const Mat4c h = secular_hamiltonian(p);
  const DDSequence s{{0.2e-6}, {ElectronGate::I, ElectronGate::I}};
  EXPECT_LT((sequence_unitary(s, h) - dd_unit(0.2e-6, h)).norm(), 1e-12);
}

TEST(SequenceUnitary, SplittingComposes) {
  SpinSystemParams p;
  const Mat4c h = secular_hamiltonian(p);
  const DDSequence full{{0.1e-6, 0.25e-6, 0.05e-6, 0.3e-6},
                        {ElectronGate::Rx90, ElectronGate::I, ElectronGate::Ry90, ElectronGate::Rz90, ElectronGate::Rx180}};
  const DDSequence first{{0.1e-6, 0.25e-6}, {ElectronGate::Rx90, ElectronGate::I, ElectronGate::Ry90}};
  const DDSequence second{{0.05e-6, 0.3e-6}, {ElectronGate::I, ElectronGate::Rz90, ElectronGate::Rx180}};
  EXPECT_LT((sequence_unitary(full, h) - sequence_unitary(second, h) * sequence_unitary(first, h)).norm(), 1e-10);
}

TEST(DdSequence, DurationIsFourTimesSpacingSum) {
  const DDSequence s{{1e-7, 2e-7, 3e-7}, {}};
  EXPECT_NEAR(s.total_duration(), 2.4e-6, 2.4e-6 * 1e-15);
  DDSequence bad{{1e-7, -1e-9}, {}};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  DDSequence slots{{1e-7}, {ElectronGate::I}};
  EXPECT_THROW(slots.validate(), std::invalid_argument);
}

TEST(GateFidelity, Examples) {
  const Mat4c cz = *named_target("cz");
  EXPECT_NEAR(gate_fidelity(CMatrix(cz), CMatrix(cz)), 1.0, 1e-15);
  EXPECT_NEAR(gate_fidelity(CMatrix(std::polar(1.0, 0.77) * cz), CMatrix(cz)), 1.0, 1e-15);
  const Mat4c zi = pauli::kron(pauli::z(), pauli::id());
  EXPECT_NEAR(gate_fidelity(CMatrix(cz * zi), CMatrix(cz)), 0.0, 1e-15);
  EXPECT_THROW(gate_fidelity(CMatrix::Identity(2, 2), CMatrix(cz)), std::invalid_argument);
}

TEST(Synthesize, IdentityNeedsNoUnits) {
  const auto r = synthesize("identity", SpinSystemParams{});
  EXPECT_EQ(r.sequence.k(), 0);
  EXPECT_TRUE(r.sequence.empty());
  EXPECT_DOUBLE_EQ(r.unitary_fidelity, 1.0);
  EXPECT_FALSE(r.below_threshold);
}

TEST(Synthesize, RejectsBadInput) {
  SynthesisOptions o;
  o.threshold = 1.5;
  EXPECT_THROW(synthesize("cz", SpinSystemParams{}, o), std::invalid_argument);
  EXPECT_THROW(synthesize("toffoli", SpinSystemParams{}), std::invalid_argument);
}

TEST(Synthesize, UnreachableThresholdIsFlagged) {
  SynthesisOptions o;
  o.threshold = 1.0;
  o.max_k = 2;
  o.restarts = 4;
  const auto r = synthesize("swap", SpinSystemParams{}, o);
  EXPECT_TRUE(r.below_threshold);
  EXPECT_LT(r.unitary_fidelity, 1.0);
  // The best candidate found is returned as is.
  EXPECT_NEAR(gate_fidelity(CMatrix(sequence_unitary(r.sequence, SpinSystemParams{})), CMatrix(*named_target("swap"))),
              r.unitary_fidelity, 1e-12);
}

// SWAP and CZ at the working point, shared across the tests below.
class WorkingPointGates : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    SynthesisOptions o;
    o.restarts = 24;
    swap_ = new SynthesisReport(cache().get(SpinSystemParams{}, "swap", o));
    cz_ = new SynthesisReport(cache().get(SpinSystemParams{}, "cz", o));
  }
  static void TearDownTestSuite() {
    delete swap_;
    delete cz_;
  }
  static SynthesisCache& cache() {
    static SynthesisCache c;
    return c;
  }
  static const SynthesisReport* swap_;
  static const SynthesisReport* cz_;
};
const SynthesisReport* WorkingPointGates::swap_ = nullptr;
const SynthesisReport* WorkingPointGates::cz_ = nullptr;

TEST_F(WorkingPointGates, SwapReachesThresholdNearReferenceDuration) {
  EXPECT_FALSE(swap_->below_threshold);
  EXPECT_GE(swap_->unitary_fidelity, 0.999);
  const double d = swap_->sequence.total_duration();
  EXPECT_GE(d, 1.6e-6 / 2);
  EXPECT_LE(d, 1.6e-6 * 2);
}

TEST_F(WorkingPointGates, CzReachesThresholdNearReferenceDuration) {
  EXPECT_FALSE(cz_->below_threshold);
  EXPECT_GE(cz_->unitary_fidelity, 0.999);
  const double d = cz_->sequence.total_duration();
  EXPECT_GE(d, 1.1e-6 / 2);
  EXPECT_LE(d, 1.1e-6 * 2);
}

TEST_F(WorkingPointGates, ReplayReproducesReportedFidelity) {
  SpinSystemParams p;
  for (const auto* r : {swap_, cz_}) {
    const double f = gate_fidelity(CMatrix(sequence_unitary(r->sequence, p)), CMatrix(*named_target(r->target_name)));
    EXPECT_NEAR(f, r->unitary_fidelity, 1e-12) << r->target_name;
    for (double t : r->sequence.tau_f) EXPECT_GE(t, 1e-9);
  }
}

TEST_F(WorkingPointGates, NoiselessBathMatchesNoiselessFidelity) {
  SpinSystemParams p;
  const Mat4c target = *named_target("cz");
  OUNoise n;
  n.b_rad_s = 0;
  n.tau_c_s = 1e-3;
  const auto noisy = noisy_gate_fidelity(cz_->sequence, p, target, n, 100);
  EXPECT_NEAR(noisy.mean, tomographic_fidelity(sequence_unitary(cz_->sequence, p), target), 1e-9);
  EXPECT_NEAR(noisy.stderr_, 0, 1e-9);
  EXPECT_THROW(noisy_gate_fidelity(cz_->sequence, p, target, n, 99), std::invalid_argument);
}

TEST_F(WorkingPointGates, NoisyFidelityDropsWithBathStrength) {
  SpinSystemParams p;
  const Mat4c target = *named_target("cz");
  double last = 1.0 + 1e-12;
  for (double b : {2e5, 1e6, 4e6}) {
    OUNoise n;
    n.b_rad_s = b;
    n.tau_c_s = 1e-4;
    n.seed = 17;
    const double f = noisy_gate_fidelity(cz_->sequence, p, target, n, 300).mean;
    EXPECT_LE(f, last) << "b = " << b;
    last = f;
  }
}

TEST_F(WorkingPointGates, LongerSequenceIsNoBetter) {
  SpinSystemParams p;
  const Mat4c id = Mat4c::Identity();
  const DDSequence twice = repeated(cz_->sequence, 2), four = repeated(cz_->sequence, 4);
  ASSERT_GT(four.total_duration(), twice.total_duration());
  OUNoise n;
  n.b_rad_s = 1e6;
  n.tau_c_s = 1e-4;
  n.seed = 5;
  const auto a = noisy_gate_fidelity(twice, p, id, n, 300), b = noisy_gate_fidelity(four, p, id, n, 300);
  EXPECT_LE(b.mean, a.mean);
}

TEST_F(WorkingPointGates, GateFileRoundTrip) {
  GateFile g{"swap", SpinSystemParams{}, swap_->sequence, swap_->unitary_fidelity};
  const GateFile back = parse_gate_file(to_text(g));
  EXPECT_EQ(back.target, "swap");
  EXPECT_EQ(back.sequence.tau_f, g.sequence.tau_f);
  EXPECT_EQ(back.sequence.electron_gates, g.sequence.electron_gates);
  EXPECT_EQ(back.fidelity, g.fidelity);
  EXPECT_EQ(back.params.b_t, g.params.b_t);
}

TEST(GateFile, RejectsWrongFormatAndCount) {
  EXPECT_THROW(parse_gate_file("format = other/1\n"), ConfigError);
  GateFile g{"cz", SpinSystemParams{}, DDSequence{{1e-7}, {ElectronGate::I, ElectronGate::Rx90}}, 0.5};
  std::string text = to_text(g);
  text.replace(text.find("k = 1"), 5, "k = 2");
  EXPECT_THROW(parse_gate_file(text), ConfigError);
}

TEST(UnconditionalRotations, NuclearRotationsReachThreshold) {
  SynthesisOptions o;
  o.restarts = 24;
  for (const char* t : {"nuc_rx90", "nuc_rz90"}) {
    const auto r = synthesize(t, SpinSystemParams{}, o);
    EXPECT_GE(r.unitary_fidelity, 0.999) << t;
  }
}

}  // namespace
}  // namespace hfcluster
