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

enum class SubspaceKind { Symmetric, Antisymmetric, GES, Custom };

std::string to_string(SubspaceKind kind);
SubspaceKind parse_subspace_kind(const std::string& token);

/// Orthonormal column set spanning a subspace of a multiparty space.
/// Construction validates pairwise orthonormality (Gram residual <= 1e-12)
/// and, for Symmetric, invariance of every column under every adjacent
/// transposition of parties (residual <= 1e-12).
class SubspaceBasis {
 public:
  SubspaceBasis(PartyLayout layout, Matrix columns, SubspaceKind kind);

  const PartyLayout& layout() const { return layout_; }
  const Matrix& columns() const { return columns_; }
  SubspaceKind kind() const { return kind_; }
  int dimension() const { return static_cast<int>(columns_.cols()); }

  StateVector column(int i) const;

  /// Rank-r orthogonal projector B B-dagger onto the span.
  Matrix projector() const { return columns_ * columns_.adjoint(); }

 private:
  PartyLayout layout_;
  Matrix columns_;
  SubspaceKind kind_;
};

/// N-qubit Dicke state with k excitations: the C(N,k) kets carrying exactly
/// k ones, each with amplitude 1/sqrt(C(N,k)).
StateVector dicke_state(int num_parties, int excitations);

struct ProjectedSubspace {
  Matrix projector;
  SubspaceBasis basis;
};

/// Symmetric subspace of N parties with local dimension d.  Rank is
/// C(N+d-1, d-1); basis columns are the normalized permutation-class
/// superpositions, ordered by the lexicographically smallest computational
/// ket in each class (for qubits this is excitation number 0..N).
ProjectedSubspace symmetric_subspace(int num_parties, int local_dim);

/// Antisymmetric subspace; rank C(d, N), the zero projector when d < N.
/// Basis columns are Slater determinants over level subsets in
/// lexicographic subset order.
ProjectedSubspace antisymmetric_subspace(int num_parties, int local_dim);

/// Orthonormal basis of the n-qubit genuinely entangled subspace obtained by
/// modified Gram-Schmidt (with one re-orthogonalization pass) over the
/// spanning vectors
///   sum_{k=2}^{n} |0>|binary(2^{n-k}+j)> - |1>|binary(j)>,
/// taken in increasing-j order, j = 0 .. 2^{n-2}-1; binary(x) is the
/// (n-1)-digit expansion.  Dimension is 2^{n-2}; requires n >= 3.
SubspaceBasis ges_basis(int num_qubits);

/// Frobenius norm of (P rho P - rho) where P is the tensor product of the
/// per-group projectors arranged by `partition`.  Zero means the state is
/// supported on the product of the group subspaces.
double support_residual(const DensityOperator& rho, const PartitionSpec& partition,
                        const std::vector<Matrix>& group_projectors);

/// Deterministic unit vector in the span of `basis` (Gaussian coefficients
/// seeded by `seed`).
StateVector sample_subspace_vector(const SubspaceBasis& basis, std::uint64_t seed);

}  // namespace gmeforge
