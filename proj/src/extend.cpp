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

#include "gmeforge/extend.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

#include "gmeforge/statezoo.hpp"

namespace gmeforge {

namespace {

void require_symmetric_image(const Matrix& v, const PartyLayout& out_layout) {
  if (out_layout.num_parties() == 1) return;  // single party: whole space
  const Matrix p = symmetric_subspace(out_layout.num_parties(), out_layout.dim(0)).projector;
  const double residual = (p * v - v).cwiseAbs().maxCoeff();
  if (residual > 1e-12) {
    throw ArgumentError("isometry columns leave the symmetric subspace (residual " +
                        std::to_string(residual) + ")");
  }
}

}  // namespace

std::string to_string(ImageKind kind) {
  switch (kind) {
    case ImageKind::Symmetric: return "sym";
    case ImageKind::GES: return "ges";
    case ImageKind::Both: return "both";
    case ImageKind::Custom: return "custom";
  }
  return "custom";
}

IsometryMap::IsometryMap(int in_dim, PartyLayout out_layout, Matrix matrix,
                         ImageKind image_kind)
    : in_dim_(in_dim),
      out_layout_(std::move(out_layout)),
      matrix_(std::move(matrix)),
      image_kind_(image_kind) {
  if (in_dim_ < 1) throw ArgumentError("IsometryMap: input dimension must be >= 1");
  if (matrix_.rows() != out_layout_.total_dim() || matrix_.cols() != in_dim_) {
    throw ArgumentError("IsometryMap: matrix shape does not match layouts");
  }
  if (out_layout_.total_dim() < in_dim_) {
    throw ArgumentError("IsometryMap: output space smaller than input space");
  }
  const Matrix gram = matrix_.adjoint() * matrix_;
  const double residual =
      (gram - Matrix::Identity(in_dim_, in_dim_)).cwiseAbs().maxCoeff();
  if (residual > 1e-12) {
    throw ArgumentError("IsometryMap: columns not orthonormal (V^dag V residual " +
                        std::to_string(residual) + ")");
  }
}

IsometryMap copy_isometry(int local_dim, int num_copies) {
  if (local_dim < 2) throw ArgumentError("copy_isometry: local dimension must be >= 2");
  if (num_copies < 1) throw ArgumentError("copy_isometry: need at least one copy");
  PartyLayout out(std::vector<int>(static_cast<std::size_t>(num_copies), local_dim));
  Matrix v = Matrix::Zero(out.total_dim(), local_dim);
  // |i>^(x)L sits at flat index i * (d^L - 1) / (d - 1).
  const Index repunit = (out.total_dim() - 1) / (local_dim - 1);
  for (int i = 0; i < local_dim; ++i) v(static_cast<Index>(i) * repunit, i) = 1.0;
  require_symmetric_image(v, out);
  return IsometryMap(local_dim, std::move(out), std::move(v), ImageKind::Symmetric);
}

IsometryMap dicke_isometry(int local_dim, bool reversed) {
  if (local_dim < 2) throw ArgumentError("dicke_isometry: local dimension must be >= 2");
  const int n = local_dim - 1;
  PartyLayout out(std::vector<int>(static_cast<std::size_t>(n), 2));
  Matrix v(out.total_dim(), local_dim);
  for (int i = 0; i < local_dim; ++i) {
    const int k = reversed ? local_dim - 1 - i : i;
    v.col(i) = dicke_state(n, k).amplitudes();
  }
  require_symmetric_image(v, out);
  return IsometryMap(local_dim, std::move(out), std::move(v), ImageKind::Symmetric);
}

IsometryMap ges_isometry(int num_qubits) {
  SubspaceBasis basis = ges_basis(num_qubits);
  return IsometryMap(basis.dimension(), basis.layout(), basis.columns(), ImageKind::GES);
}

IsometryMap w_isometry(int num_qubits) {
  if (num_qubits < 3) {
    throw ArgumentError("w_isometry: need at least 3 output qubits (the W state and its "
                        "complement coincide at 2)");
  }
  PartyLayout out(std::vector<int>(static_cast<std::size_t>(num_qubits), 2));
  Matrix v(out.total_dim(), 2);
  v.col(0) = w_state(num_qubits).amplitudes();
  v.col(1) = w_complement(num_qubits).amplitudes();
  require_symmetric_image(v, out);
  return IsometryMap(2, std::move(out), std::move(v), ImageKind::Both);
}

IsometryMap identity_isometry(int local_dim) { return copy_isometry(local_dim, 1); }

PartitionSpec induced_partition(const std::vector<IsometryMap>& maps) {
  if (maps.empty()) throw ArgumentError("induced_partition: no maps");
  std::vector<std::vector<int>> groups;
  int next = 0;
  for (const auto& map : maps) {
    std::vector<int> group;
    for (int p = 0; p < map.out_layout().num_parties(); ++p) group.push_back(next++);
    groups.push_back(std::move(group));
  }
  return PartitionSpec(next, std::move(groups));
}

std::string induced_partition_tag(const PartitionSpec& partition) {
  return std::string(kTagInducedPartitionPrefix) + partition.to_string();
}

namespace {

Matrix combined_isometry(const PartyLayout& in_layout,
                         const std::vector<IsometryMap>& maps,
                         PartyLayout* out_layout) {
  if (static_cast<int>(maps.size()) != in_layout.num_parties()) {
    throw ArgumentError("apply_extension: need exactly one map per input party");
  }
  std::vector<int> out_dims;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].in_dim() != in_layout.dim(static_cast<int>(k))) {
      throw ArgumentError("apply_extension: map " + std::to_string(k) +
                          " expects input dimension " + std::to_string(maps[k].in_dim()) +
                          " but party has " + std::to_string(in_layout.dim(static_cast<int>(k))));
    }
    const auto& dims = maps[k].out_layout().dims();
    out_dims.insert(out_dims.end(), dims.begin(), dims.end());
  }
  *out_layout = PartyLayout(std::move(out_dims));  // enforces the dimension cap
  Matrix w = maps[0].matrix();
  for (std::size_t k = 1; k < maps.size(); ++k) {
    w = Eigen::kroneckerProduct(w, maps[k].matrix()).eval();
  }
  return w;
}

}  // namespace

DensityOperator apply_extension(const DensityOperator& rho,
                                const std::vector<IsometryMap>& maps) {
  PartyLayout out_layout({2});
  const Matrix w = combined_isometry(rho.layout(), maps, &out_layout);
  Matrix sigma = w * rho.matrix() * w.adjoint();
  std::set<std::string> tags = rho.tags();
  // The induced grouping of this extension supersedes any earlier one.
  for (auto it = tags.begin(); it != tags.end();) {
    if (it->rfind(kTagInducedPartitionPrefix, 0) == 0) {
      it = tags.erase(it);
    } else {
      ++it;
    }
  }
  tags.insert(induced_partition_tag(induced_partition(maps)));
  return DensityOperator(std::move(out_layout), std::move(sigma), std::move(tags));
}

StateVector apply_extension(const StateVector& psi,
                            const std::vector<IsometryMap>& maps) {
  PartyLayout out_layout({2});
  const Matrix w = combined_isometry(psi.layout(), maps, &out_layout);
  return StateVector(std::move(out_layout), w * psi.amplitudes());
}

}  // namespace gmeforge
