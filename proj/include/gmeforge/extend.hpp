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

#include <vector>

#include "gmeforge/core.hpp"
#include "gmeforge/subspace.hpp"

namespace gmeforge {

enum class ImageKind { Symmetric, GES, Both, Custom };

std::string to_string(ImageKind kind);

/// Linear map from a d-dimensional single-party input into a multiparty
/// output subspace, V-dagger V = identity (validated to 1e-12).
class IsometryMap {
 public:
  IsometryMap(int in_dim, PartyLayout out_layout, Matrix matrix, ImageKind image_kind);

  int in_dim() const { return in_dim_; }
  const PartyLayout& out_layout() const { return out_layout_; }
  const Matrix& matrix() const { return matrix_; }
  ImageKind image_kind() const { return image_kind_; }

  /// Projector V V-dagger onto the image.
  Matrix image_projector() const { return matrix_ * matrix_.adjoint(); }

 private:
  int in_dim_;
  PartyLayout out_layout_;
  Matrix matrix_;
  ImageKind image_kind_;
};

/// |i> -> |i>^(x)L.  Image lies in the symmetric subspace of L d-level parties.
IsometryMap copy_isometry(int local_dim, int num_copies);

/// Basis-to-Dicke map on d levels: column i is the (d-1)-qubit Dicke state
/// with i excitations (d-1-i when reversed).
IsometryMap dicke_isometry(int local_dim, bool reversed = false);

/// Columns are the canonical n-qubit genuinely-entangled-subspace basis;
/// input dimension 2^(n-2).
IsometryMap ges_isometry(int num_qubits);

/// |0> -> W state, |1> -> its bit-flipped complement, on L >= 3 qubits.  The
/// image is both symmetric and genuinely entangled.  At L = 2 the two columns
/// coincide, so the map would not be an isometry; that case is rejected.
IsometryMap w_isometry(int num_qubits);

/// Trivial single-party isometry (identity on C^d).
IsometryMap identity_isometry(int local_dim);

/// Partition of the output parties into consecutive blocks, one per map.
PartitionSpec induced_partition(const std::vector<IsometryMap>& maps);

/// Apply one isometry per input party: sigma = (V_1 (x) ... (x) V_K) rho (.)^dagger.
/// Output parties are laid out consecutively in input-party order; trace,
/// Hermiticity and positivity are preserved; tags are copied and the induced
/// partition is recorded as a tag (replacing any previous one).
DensityOperator apply_extension(const DensityOperator& rho,
                                const std::vector<IsometryMap>& maps);

/// Pure-state version: (V_1 (x) ... (x) V_K) |psi>.
StateVector apply_extension(const StateVector& psi,
                            const std::vector<IsometryMap>& maps);

/// Tag string "induced-partition:<groups>" recorded by apply_extension.
std::string induced_partition_tag(const PartitionSpec& partition);

}  // namespace gmeforge
