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


// Prints the register state after every step of a three-rail, one-column
// run with ideal gates, then checks the photons against a linear cluster.
// Pass "timebin" to label photons as early/late instead of L/R.

#include "hfcluster/cluster_protocol.hpp"

#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace hfcluster;
  const bool timebin = argc > 1 && std::string(argv[1]) == "timebin";
  const ColumnTrace r = trace_three_rail_column(timebin ? PhotonEncoding::TimeBin : PhotonEncoding::Polarisation);
  std::cout << r.table() << "\n";
  std::cout << "branch probability " << r.branch_probability << "\n";
  std::cout << "LU overlap with the linear 3-photon graph state " << r.lu.overlap << "\n";
  std::cout << (r.passed ? "linear cluster: yes" : "linear cluster: no") << "\n";
  return r.passed ? 0 : 1;
}
