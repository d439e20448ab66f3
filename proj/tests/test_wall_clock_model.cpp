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


// Scheme-length check with the reference gate durations (SWAP 1.6 us, CZ
// 1.1 us, instantaneous electron rotations). A 2x5 cluster chains 22 SWAPs
// and 5 CZs in the stepwise schedule (11 SWAPs compact), so the ~3 us length
// used in the rate estimate is not reproduced by this gate model. Kept as
// a failing check rather than loosened.

#include "hfcluster/cluster_protocol.hpp"

#include <gtest/gtest.h>

namespace hfcluster {
namespace {

GateLibrary reference_durations() {
  GateLibrary lib = GateLibrary::ideal();
  lib.set_sequence("swap", DDSequence{{1.6e-6 / 4}, {ElectronGate::I, ElectronGate::I}});
  lib.set_sequence("cz", DDSequence{{1.1e-6 / 4}, {ElectronGate::I, ElectronGate::I}});
  return lib;
}

TEST(WallClockModel, TwoByFiveNearThreeMicroseconds) {
  const double t = wall_clock_model(build_schedule(2, 5), reference_durations());
  EXPECT_GE(t, 3e-6 / 2) << "modelled " << t * 1e6 << " us";
  EXPECT_LE(t, 3e-6 * 2) << "modelled " << t * 1e6 << " us";
}

TEST(WallClockModel, CompactTwoByFiveNearThreeMicroseconds) {
  const double t = wall_clock_model(build_schedule(2, 5, ScheduleStyle::Compact), reference_durations());
  EXPECT_GE(t, 3e-6 / 2) << "modelled " << t * 1e6 << " us";
  EXPECT_LE(t, 3e-6 * 2) << "modelled " << t * 1e6 << " us";
}

}  // namespace
}  // namespace hfcluster
