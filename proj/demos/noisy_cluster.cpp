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


// 2x2 cluster-state fidelity with synthesized gates under a dephasing bath,
// for a few electron T2 values.
// Usage: demo_noisy_cluster [trials]

#include "hfcluster/pipeline.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace hfcluster;
  const int trials = argc > 1 ? std::atoi(argv[1]) : 500;
  const SpinSystemParams p;
  SynthesisCache cache;
  const GateLibrary lib = build_gate_library(synthesize_swap_cz(p, protocol_synthesis_options(), cache));
  for (double t2 : {2e-6, 8e-6, 300e-6}) {
    ProtocolSpec spec;
    spec.params = p;
    spec.library = lib;
    spec.noise = bath_for(t2, 0.01, 1);
    spec.trials = trials;
    spec.workers = default_workers();
    const ProtocolResult r = run(spec);
    std::cout << "T2 = " << t2 * 1e6 << " us: F = " << r.fidelity << " +- " << r.fidelity_stderr << " (duration "
              << r.wall_clock_model * 1e6 << " us)\n";
  }
}
