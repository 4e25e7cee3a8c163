// Copyright 2026 The gmeforge developers
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

#include "gmeforge/core.hpp"

namespace gmeforge {

/// Exact binomial coefficient as a double (inputs small enough to be exact).
double binomial(int n, int k);

/// theta = max_{i != j} sqrt(mu_i mu_j) over Schmidt weights.  Entries must
/// be nonnegative and sum to 1 within 1e-12 (zeros are allowed so padded
/// weight vectors can be scanned).
double theta(const RealVector& mu);

/// Separability threshold of the white-noise mixture of a pure two-qudit
/// state with Schmidt weights mu: 1 / (d^2 theta + 1); the mixture is
/// entangled exactly above it.
double p_sep_threshold(const RealVector& mu, int d);

/// Closed form of theta for the Dicke-source Schmidt weights, split by the
/// parity of d.
double theta_dicke(int d);

/// Upper end of the cited local-model region of the isotropic family:
/// (3d-1)(d-1)^(d-1) / ((d+1) d^d).
double p_gm(int d);

/// Local-model ceiling for the white-noise Schmidt-state mixture:
/// p_gm / ((1 - p_gm)(d-1) + 1).
double p_gm_tilde(int d);

}  // namespace gmeforge
