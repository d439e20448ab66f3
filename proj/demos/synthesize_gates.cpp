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


// Synthesizes SWAP and CZ at the default working point (70 MHz hyperfine,
// B = 0.6 T along x and z) and prints each sequence.
// Usage: demo_synthesize_gates [restarts]

#include "hfcluster/gate_synthesis.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  using namespace hfcluster;
  SynthesisOptions o;
  if (argc > 1) o.restarts = std::atoi(argv[1]);
  const SpinSystemParams p;
  for (const char* target : {"swap", "cz"}) {
    const SynthesisReport r = synthesize(target, p, o);
    std::cout << target << ": k = " << r.sequence.k() << ", duration " << r.sequence.total_duration() * 1e6
              << " us, fidelity " << r.unitary_fidelity << (r.below_threshold ? " (below threshold)" : "") << "\n";
    std::cout << "  gates:";
    for (auto g : r.sequence.electron_gates) std::cout << ' ' << to_string(g);
    std::cout << "\n  tau_f (ns):";
    for (double t : r.sequence.tau_f) std::cout << ' ' << t * 1e9;
    std::cout << "\n";
  }
}
