// Copyright 2026 The fiberlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "fiberlink/density.hpp"

namespace fiberlink {

/// Populations of |00>, |S>, |T>, |11> (all with photon vacuum).
struct ZeroSubspacePopulations {
  double p00;
  double ps;
  double pt;
  double p11;
};

struct ObservableRecord {
  double p00;
  double ps;
  double pt;
  double p11;
  double fidelity;
  double trace_error;
  double min_eig;
};

/// <T,000| rho |T,000> with |T> = (|01> + |10>)/sqrt(2).
double fidelity_t(const DensityMatrix& rho);

/// <T| Tr_photons(rho) |T>: counts |T> with any photon configuration.
double traced_fidelity_t(const DensityMatrix& rho);

ZeroSubspacePopulations zero_subspace_populations(const DensityMatrix& rho);

ObservableRecord observe(const DensityMatrix& rho);

}  // namespace fiberlink
