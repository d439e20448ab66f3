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

// Umbrella header.

#pragma once

#include "hfcluster/budget.hpp"
#include "hfcluster/cluster_protocol.hpp"
#include "hfcluster/config.hpp"
#include "hfcluster/emission_model.hpp"
#include "hfcluster/gate_synthesis.hpp"
#include "hfcluster/invariants.hpp"
#include "hfcluster/noise_bath.hpp"
#include "hfcluster/optimize.hpp"
#include "hfcluster/parallel.hpp"
#include "hfcluster/pipeline.hpp"
#include "hfcluster/presets.hpp"
#include "hfcluster/quantum_core.hpp"
#include "hfcluster/report.hpp"
#include "hfcluster/spin_hamiltonian.hpp"
