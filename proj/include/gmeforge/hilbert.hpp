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

#include <cstdint>
#include <vector>

#include "gmeforge/core.hpp"

namespace gmeforge {

/// Kronecker composition; output layout is the concatenation of the inputs.
StateVector tensor_compose(const StateVector& a, const StateVector& b);
DensityOperator tensor_compose(const DensityOperator& a, const DensityOperator& b);

/// Trace out every party not in `keep`.  The result's parties follow the
/// ascending original order of `keep`.  Trace is preserved.
DensityOperator partial_trace(const DensityOperator& rho, std::vector<int> keep);

/// Transpose the listed parties in the computational basis.  The result is
/// Hermitian with the same trace but in general not positive, so it is
/// returned as a plain matrix.
Matrix partial_transpose(const DensityOperator& rho, const std::vector<int>& subset);
Matrix partial_transpose(const Matrix& m, const PartyLayout& layout,
                         const std::vector<int>& subset);

struct SchmidtDecomposition {
  RealVector coefficients;  // singular values, descending
  int rank = 0;             // count of coefficients > tolerance
};

/// Schmidt coefficients of a pure state across a bipartition.  Coefficients
/// are nonnegative, descending, and their squares sum to 1.
SchmidtDecomposition schmidt_decomposition(const StateVector& psi,
                                           const Bipartition& cut,
                                           double rank_tolerance = 1e-8);

/// Minimum eigenvalue of a Hermitian matrix.  Throws NumericsError when the
/// input deviates from Hermiticity by more than 1e-10 (max-abs).
double min_eigenvalue_hermitian(const Matrix& h);

struct HermitianEigensystem {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns
};

/// Full Hermitian eigendecomposition with the same input contract as
/// min_eigenvalue_hermitian.
HermitianEigensystem hermitian_eigensystem(const Matrix& h);

/// All 2^(K-1)-1 unordered bipartitions whose sides are unions of whole
/// groups, each reported with the side containing group 0, ordered
/// lexicographically by that side's party list.
std::vector<Bipartition> enumerate_union_bipartitions(const PartitionSpec& partition);

/// All bipartitions of n individual parties (the K = n singleton case).
std::vector<Bipartition> enumerate_bipartitions(int num_parties);

/// Operator acting as `op` on the listed parties (in the listed order) and as
/// identity on the rest, expressed in the full space.
Matrix embed_operator(const PartyLayout& layout, const std::vector<int>& parties,
                      const Matrix& op);

/// Relabel parties: output party p is input party perm[p].
StateVector permute_parties(const StateVector& psi, const std::vector<int>& perm);
DensityOperator permute_parties(const DensityOperator& rho, const std::vector<int>& perm);

/// Deterministic seeded states for sampling-style checks.  The generator is
/// mt19937_64 with hand-rolled Gaussian sampling, so sequences do not depend
/// on the standard library implementation.
StateVector random_state_vector(const PartyLayout& layout, std::uint64_t seed);
DensityOperator random_density_operator(const PartyLayout& layout, std::uint64_t seed,
                                        int rank = 0);

}  // namespace gmeforge
