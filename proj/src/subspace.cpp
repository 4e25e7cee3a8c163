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

#include "gmeforge/subspace.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "gmeforge/hilbert.hpp"
#include "gmeforge/thresholds.hpp"

namespace gmeforge {

namespace {

// Permutation that swaps adjacent parties p and p+1 (requires equal dims).
std::vector<int> adjacent_transposition(int num_parties, int p) {
  std::vector<int> perm(static_cast<std::size_t>(num_parties));
  for (int i = 0; i < num_parties; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(p + 1)]);
  return perm;
}

double uniform_open01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

Complex complex_gaussian(std::mt19937_64& rng) {
  const double r = std::sqrt(-std::log(uniform_open01(rng)));
  const double phi = 2.0 * std::numbers::pi * uniform_open01(rng);
  return Complex(r * std::cos(phi), r * std::sin(phi));
}

}  // namespace

std::string to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::Symmetric: return "sym";
    case SubspaceKind::Antisymmetric: return "antisym";
    case SubspaceKind::GES: return "ges";
    case SubspaceKind::Custom: return "custom";
  }
  return "custom";
}

SubspaceKind parse_subspace_kind(const std::string& token) {
  if (token == "sym") return SubspaceKind::Symmetric;
  if (token == "antisym") return SubspaceKind::Antisymmetric;
  if (token == "ges") return SubspaceKind::GES;
  if (token == "custom") return SubspaceKind::Custom;
  throw ArgumentError("unknown subspace kind '" + token + "'");
}

SubspaceBasis::SubspaceBasis(PartyLayout layout, Matrix columns, SubspaceKind kind)
    : layout_(std::move(layout)), columns_(std::move(columns)), kind_(kind) {
  if (columns_.rows() != layout_.total_dim()) {
    throw ArgumentError("SubspaceBasis: column length does not match layout");
  }
  if (columns_.cols() > 0) {
    const Matrix gram = columns_.adjoint() * columns_;
    const double gram_res =
        (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (gram_res > 1e-12) {
      throw ArgumentError("SubspaceBasis: columns not orthonormal (Gram residual " +
                          std::to_string(gram_res) + ")");
    }
  }
  if (kind_ == SubspaceKind::Symmetric) {
    for (int p = 0; p + 1 < layout_.num_parties(); ++p) {
      const auto perm = adjacent_transposition(layout_.num_parties(), p);
      for (int c = 0; c < columns_.cols(); ++c) {
        StateVector col(layout_, columns_.col(c));
        const Vector swapped = permute_parties(col, perm).amplitudes();
        if ((swapped - columns_.col(c)).norm() > 1e-12) {
          throw ArgumentError("SubspaceBasis: Symmetric column not permutation invariant");
        }
      }
    }
  }
}

StateVector SubspaceBasis::column(int i) const {
  if (i < 0 || i >= dimension()) throw ArgumentError("SubspaceBasis: column out of range");
  return StateVector(layout_, columns_.col(i));
}

StateVector dicke_state(int num_parties, int excitations) {
  if (num_parties < 1) throw ArgumentError("dicke_state: need at least one party");
  if (excitations < 0 || excitations > num_parties) {
    throw ArgumentError("dicke_state: excitation count out of range");
  }
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(num_parties), 2));
  const double amp = 1.0 / std::sqrt(binomial(num_parties, excitations));
  Vector v = Vector::Zero(layout.total_dim());
  for (Index i = 0; i < layout.total_dim(); ++i) {
    if (std::popcount(static_cast<std::uint64_t>(i)) == excitations) v(i) = amp;
  }
  return StateVector(std::move(layout), std::move(v));
}

ProjectedSubspace symmetric_subspace(int num_parties, int local_dim) {
  if (num_parties < 1) throw ArgumentError("symmetric_subspace: need at least one party");
  if (local_dim < 2) throw ArgumentError("symmetric_subspace: local dimension must be >= 2");
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(num_parties), local_dim));
  const Index total = layout.total_dim();
  const auto st = strides(layout);

  // Group kets by occupation class; first-seen flat index fixes column order.
  std::map<std::vector<int>, int> class_of;
  std::vector<std::vector<Index>> members;
  for (Index i = 0; i < total; ++i) {
    std::vector<int> occ(static_cast<std::size_t>(local_dim), 0);
    for (int p = 0; p < num_parties; ++p) {
      occ[static_cast<std::size_t>((i / st[static_cast<std::size_t>(p)]) % local_dim)]++;
    }
    auto it = class_of.find(occ);
    if (it == class_of.end()) {
      class_of.emplace(std::move(occ), static_cast<int>(members.size()));
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it->second)].push_back(i);
    }
  }

  Matrix basis = Matrix::Zero(total, static_cast<Index>(members.size()));
  for (std::size_t c = 0; c < members.size(); ++c) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(members[c].size()));
    for (Index i : members[c]) basis(i, static_cast<Index>(c)) = amp;
  }
  Matrix projector = basis * basis.adjoint();
  return ProjectedSubspace{std::move(projector),
                           SubspaceBasis(layout, std::move(basis), SubspaceKind::Symmetric)};
}

namespace {

// Slater determinant over the level subset `levels` (ascending), written into
// `column`; Heap's algorithm tracks the permutation sign.
void fill_slater_column(const PartyLayout& layout, const std::vector<int>& levels,
                        Eigen::Ref<Vector> column) {
  const int n = layout.num_parties();
  const auto st = strides(layout);
  std::vector<int> perm = levels;
  std::vector<int> counters(static_cast<std::size_t>(n), 0);
  int sign = 1;
  auto emit = [&]() {
    Index flat = 0;
    for (int p = 0; p < n; ++p) {
      flat += static_cast<Index>(perm[static_cast<std::size_t>(p)]) *
              st[static_cast<std::size_t>(p)];
    }
    column(flat) += sign;
  };
  emit();
  int i = 0;
  while (i < n) {
    auto& c = counters[static_cast<std::size_t>(i)];
    if (c < i) {
      if (i % 2 == 0) {
        std::swap(perm[0], perm[static_cast<std::size_t>(i)]);
      } else {
        std::swap(perm[static_cast<std::size_t>(c)], perm[static_cast<std::size_t>(i)]);
      }
      sign = -sign;
      emit();
      ++c;
      i = 0;
    } else {
      c = 0;
      ++i;
    }
  }
  column /= column.norm();
}

}  // namespace

ProjectedSubspace antisymmetric_subspace(int num_parties, int local_dim) {
  if (num_parties < 1) throw ArgumentError("antisymmetric_subspace: need at least one party");
  if (local_dim < 2) throw ArgumentError("antisymmetric_subspace: local dimension must be >= 2");
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(num_parties), local_dim));
  const Index total = layout.total_dim();
  if (local_dim < num_parties) {
    // Zero subspace: rank-0 projector with an empty basis.
    return ProjectedSubspace{Matrix::Zero(total, total),
                             SubspaceBasis(layout, Matrix::Zero(total, 0),
                                           SubspaceKind::Antisymmetric)};
  }
  // Enumerate level subsets {l_0 < ... < l_{N-1}} lexicographically.
  std::vector<int> subset(static_cast<std::size_t>(num_parties));
  for (int i = 0; i < num_parties; ++i) subset[static_cast<std::size_t>(i)] = i;
  const auto rank = static_cast<Index>(binomial(local_dim, num_parties));
  Matrix basis = Matrix::Zero(total, rank);
  Index col = 0;
  while (true) {
    basis.col(col).setZero();
    fill_slater_column(layout, subset, basis.col(col));
    ++col;
    int i = num_parties - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == local_dim - num_parties + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < num_parties; ++j) {
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  Matrix projector = basis * basis.adjoint();
  return ProjectedSubspace{std::move(projector),
                           SubspaceBasis(layout, std::move(basis),
                                         SubspaceKind::Antisymmetric)};
}

SubspaceBasis ges_basis(int num_qubits) {
  if (num_qubits < 3) throw ArgumentError("ges_basis: need at least 3 qubits");
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(num_qubits), 2));
  const Index total = layout.total_dim();
  const Index half = total / 2;            // offset of the |1>... block
  const Index count = half / 2;            // 2^(n-2) spanning vectors
  Matrix columns(total, count);
  for (Index j = 0; j < count; ++j) {
    Vector v = Vector::Zero(total);
    for (int k = 2; k <= num_qubits; ++k) {
      v(static_cast<Index>(Index{1} << (num_qubits - k)) + j) += 1.0;
    }
    v(half + j) -= 1.0;
    // Modified Gram-Schmidt with one re-orthogonalization pass.
    for (int pass = 0; pass < 2; ++pass) {
      for (Index c = 0; c < j; ++c) {
        v -= columns.col(c).dot(v) * columns.col(c);
      }
    }
    const double norm = v.norm();
    if (norm < 1e-10) {
      throw ArgumentError("ges_basis: spanning vectors are linearly dependent");
    }
    columns.col(j) = v / norm;
  }
  return SubspaceBasis(std::move(layout), std::move(columns), SubspaceKind::GES);
}

double support_residual(const DensityOperator& rho, const PartitionSpec& partition,
                        const std::vector<Matrix>& group_projectors) {
  if (partition.num_parties() != rho.layout().num_parties()) {
    throw ArgumentError("support_residual: partition does not match state");
  }
  if (static_cast<int>(group_projectors.size()) != partition.num_groups()) {
    throw ArgumentError("support_residual: need one projector per group");
  }
  const Index total = rho.dim();
  Matrix p = Matrix::Ones(total, total);
  for (int g = 0; g < partition.num_groups(); ++g) {
    const auto& parties = partition.group(g);
    const Index d = sub_dimension(rho.layout(), parties);
    const Matrix& proj = group_projectors[static_cast<std::size_t>(g)];
    if (proj.rows() != d || proj.cols() != d) {
      throw ArgumentError("support_residual: projector for group " + std::to_string(g) +
                          " has wrong shape");
    }
    // P(i,j) = prod_g proj_g(sub_g(i), sub_g(j)); accumulate factor by factor.
    const auto st = strides(rho.layout());
    std::vector<Index> sub(static_cast<std::size_t>(total));
    for (Index i = 0; i < total; ++i) {
      Index r = 0;
      for (int q : parties) {
        const auto k = static_cast<std::size_t>(q);
        r = r * rho.layout().dim(q) + (i / st[k]) % rho.layout().dim(q);
      }
      sub[static_cast<std::size_t>(i)] = r;
    }
    for (Index i = 0; i < total; ++i) {
      for (Index j = 0; j < total; ++j) {
        p(i, j) *= proj(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
      }
    }
  }
  return (p * rho.matrix() * p - rho.matrix()).norm();
}

StateVector sample_subspace_vector(const SubspaceBasis& basis, std::uint64_t seed) {
  if (basis.dimension() < 1) throw ArgumentError("sample_subspace_vector: empty basis");
  std::mt19937_64 rng(seed);
  while (true) {
    Vector coeff(basis.dimension());
    for (Index i = 0; i < coeff.size(); ++i) coeff(i) = complex_gaussian(rng);
    Vector v = basis.columns() * coeff;
    if (v.norm() > 1e-8) return StateVector(basis.layout(), std::move(v));
  }
}

}  // namespace gmeforge
