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

#include "gmeforge/hilbert.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gmeforge {

namespace {

// Flat sub-index of each full-space index over `parties` (listed order),
// i.e. flat_sub[i] = mixed-radix digits of i on those parties, re-packed.
std::vector<Index> sub_index_table(const PartyLayout& layout,
                                   const std::vector<int>& parties) {
  const auto st = strides(layout);
  const Index total = layout.total_dim();
  std::vector<Index> table(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    Index r = 0;
    for (int p : parties) {
      const auto k = static_cast<std::size_t>(p);
      r = r * layout.dim(p) + (i / st[k]) % layout.dim(p);
    }
    table[static_cast<std::size_t>(i)] = r;
  }
  return table;
}

// Full-space flat index contribution of the sub-index `s` over `parties`:
// the table maps a packed sub-index to sum(digit_p * stride_p).
std::vector<Index> scatter_table(const PartyLayout& layout,
                                 const std::vector<int>& parties) {
  const auto st = strides(layout);
  Index sub_total = 1;
  for (int p : parties) sub_total *= layout.dim(p);
  std::vector<Index> table(static_cast<std::size_t>(sub_total));
  for (Index s = 0; s < sub_total; ++s) {
    Index rest = s;
    Index flat = 0;
    for (auto it = parties.rbegin(); it != parties.rend(); ++it) {
      const int d = layout.dim(*it);
      flat += (rest % d) * st[static_cast<std::size_t>(*it)];
      rest /= d;
    }
    table[static_cast<std::size_t>(s)] = flat;
  }
  return table;
}

std::vector<int> sorted_unique(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

double uniform_open01(std::mt19937_64& rng) {
  // (0,1): 53-bit mantissa shifted off zero.
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1p-53;
}

Complex complex_gaussian(std::mt19937_64& rng) {
  // Polar form; E|z|^2 = 1 and the sequence is implementation-independent.
  const double r = std::sqrt(-std::log(uniform_open01(rng)));
  const double phi = 2.0 * std::numbers::pi * uniform_open01(rng);
  return Complex(r * std::cos(phi), r * std::sin(phi));
}

}  // namespace

StateVector tensor_compose(const StateVector& a, const StateVector& b) {
  PartyLayout layout = concat(a.layout(), b.layout());
  const Index db = b.dim();
  Vector out(layout.total_dim());
  for (Index i = 0; i < a.dim(); ++i) {
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(std::move(layout), std::move(out));
}

DensityOperator tensor_compose(const DensityOperator& a, const DensityOperator& b) {
  PartyLayout layout = concat(a.layout(), b.layout());
  const Index da = a.dim();
  const Index db = b.dim();
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  // Tags are party-indexed claims about the state they were attached to;
  // they do not survive composition.
  return DensityOperator(std::move(layout), std::move(out), {});
}

DensityOperator partial_trace(const DensityOperator& rho, std::vector<int> keep) {
  keep = sorted_unique(std::move(keep));
  if (keep.empty()) throw ArgumentError("partial_trace: empty keep set");
  const int n = rho.layout().num_parties();
  for (int p : keep) {
    if (p < 0 || p >= n) throw ArgumentError("partial_trace: party index out of range");
  }
  std::vector<int> traced;
  for (int p = 0; p < n; ++p) {
    if (!std::binary_search(keep.begin(), keep.end(), p)) traced.push_back(p);
  }
  if (traced.empty()) return rho;

  const auto keep_flat = scatter_table(rho.layout(), keep);
  const auto traced_flat = scatter_table(rho.layout(), traced);
  const Index dk = static_cast<Index>(keep_flat.size());
  Matrix out = Matrix::Zero(dk, dk);
  for (Index a = 0; a < dk; ++a) {
    for (Index b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (Index t : traced_flat) {
        sum += rho.matrix()(keep_flat[static_cast<std::size_t>(a)] + t,
                            keep_flat[static_cast<std::size_t>(b)] + t);
      }
      out(a, b) = sum;
    }
  }
  return DensityOperator(sub_layout(rho.layout(), keep), std::move(out), rho.tags());
}

Matrix partial_transpose(const Matrix& m, const PartyLayout& layout,
                         const std::vector<int>& subset) {
  const auto sub = sorted_unique(subset);
  const int n = layout.num_parties();
  if (sub.empty() || static_cast<int>(sub.size()) >= n) {
    throw ArgumentError("partial_transpose: subset must be a proper nonempty subset");
  }
  for (int p : sub) {
    if (p < 0 || p >= n) throw ArgumentError("partial_transpose: party index out of range");
  }
  const Index total = layout.total_dim();
  if (m.rows() != total || m.cols() != total) {
    throw ArgumentError("partial_transpose: matrix shape does not match layout");
  }
  // Split each index into its subset contribution s_i and the remainder r_i;
  // the transpose swaps the subset contributions of row and column.
  const auto st = strides(layout);
  std::vector<Index> s_part(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    Index s = 0;
    for (int p : sub) {
      const auto k = static_cast<std::size_t>(p);
      s += ((i / st[k]) % layout.dim(p)) * st[k];
    }
    s_part[static_cast<std::size_t>(i)] = s;
  }
  Matrix out(total, total);
  for (Index i = 0; i < total; ++i) {
    const Index ri = i - s_part[static_cast<std::size_t>(i)];
    for (Index j = 0; j < total; ++j) {
      const Index rj = j - s_part[static_cast<std::size_t>(j)];
      out(i, j) = m(ri + s_part[static_cast<std::size_t>(j)],
                    rj + s_part[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

Matrix partial_transpose(const DensityOperator& rho, const std::vector<int>& subset) {
  return partial_transpose(rho.matrix(), rho.layout(), subset);
}

SchmidtDecomposition schmidt_decomposition(const StateVector& psi,
                                           const Bipartition& cut,
                                           double rank_tolerance) {
  if (cut.num_parties() != psi.layout().num_parties()) {
    throw ArgumentError("schmidt_decomposition: bipartition does not match layout");
  }
  const auto row_flat = scatter_table(psi.layout(), cut.side());
  const auto col_flat = scatter_table(psi.layout(), cut.complement());
  Matrix m(static_cast<Index>(row_flat.size()), static_cast<Index>(col_flat.size()));
  for (std::size_t r = 0; r < row_flat.size(); ++r) {
    for (std::size_t c = 0; c < col_flat.size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) =
          psi.amplitudes()(row_flat[r] + col_flat[c]);
    }
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  SchmidtDecomposition result;
  result.coefficients = svd.singularValues();
  result.rank = static_cast<int>(
      (result.coefficients.array() > rank_tolerance).count());
  return result;
}

namespace {

void require_hermitian(const Matrix& h) {
  if (h.rows() != h.cols()) throw NumericsError("hermitian eigensolve: matrix not square");
  const double res = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (res > 1e-10) {
    throw NumericsError("hermitian eigensolve: input deviates from Hermiticity by " +
                        std::to_string(res));
  }
}

}  // namespace

double min_eigenvalue_hermitian(const Matrix& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

HermitianEigensystem hermitian_eigensystem(const Matrix& h) {
  require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return HermitianEigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<Bipartition> enumerate_union_bipartitions(const PartitionSpec& partition) {
  const int k = partition.num_groups();
  if (k < 2) throw ArgumentError("enumerate_union_bipartitions: need at least 2 groups");
  std::vector<Bipartition> cuts;
  // Group 0 anchors the reported side; the complement must stay nonempty.
  const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
  for (std::uint64_t mask = 0; mask + 1 < subsets; ++mask) {
    std::vector<int> side = partition.group(0);
    for (int g = 1; g < k; ++g) {
      if (mask & (std::uint64_t{1} << (g - 1))) {
        const auto& grp = partition.group(g);
        side.insert(side.end(), grp.begin(), grp.end());
      }
    }
    cuts.emplace_back(partition.num_parties(), std::move(side));
  }
  std::sort(cuts.begin(), cuts.end(), [](const Bipartition& a, const Bipartition& b) {
    return a.side() < b.side();
  });
  return cuts;
}

std::vector<Bipartition> enumerate_bipartitions(int num_parties) {
  std::vector<std::vector<int>> groups;
  groups.reserve(static_cast<std::size_t>(num_parties));
  for (int p = 0; p < num_parties; ++p) groups.push_back({p});
  return enumerate_union_bipartitions(PartitionSpec(num_parties, std::move(groups)));
}

Matrix embed_operator(const PartyLayout& layout, const std::vector<int>& parties,
                      const Matrix& op) {
  if (parties.empty()) throw ArgumentError("embed_operator: empty party list");
  const Index sub_dim = sub_dimension(layout, parties);
  if (op.rows() != sub_dim || op.cols() != sub_dim) {
    throw ArgumentError("embed_operator: operator shape does not match parties");
  }
  const Index total = layout.total_dim();
  const auto sub = sub_index_table(layout, parties);
  // rest_i identifies the digits outside `parties`.
  const auto st = strides(layout);
  std::vector<Index> rest(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    Index r = i;
    for (int p : parties) {
      const auto k = static_cast<std::size_t>(p);
      r -= ((i / st[k]) % layout.dim(p)) * st[k];
    }
    rest[static_cast<std::size_t>(i)] = r;
  }
  Matrix out = Matrix::Zero(total, total);
  for (Index i = 0; i < total; ++i) {
    for (Index j = 0; j < total; ++j) {
      if (rest[static_cast<std::size_t>(i)] == rest[static_cast<std::size_t>(j)]) {
        out(i, j) = op(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

namespace {

std::vector<Index> permutation_table(const PartyLayout& layout,
                                     const std::vector<int>& perm,
                                     PartyLayout* new_layout) {
  const int n = layout.num_parties();
  if (static_cast<int>(perm.size()) != n) {
    throw ArgumentError("permute_parties: permutation length mismatch");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> dims(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    const int q = perm[static_cast<std::size_t>(p)];
    if (q < 0 || q >= n || seen[static_cast<std::size_t>(q)]) {
      throw ArgumentError("permute_parties: not a permutation");
    }
    seen[static_cast<std::size_t>(q)] = true;
    dims[static_cast<std::size_t>(p)] = layout.dim(q);
  }
  *new_layout = PartyLayout(dims);
  const auto old_st = strides(layout);
  const auto new_st = strides(*new_layout);
  const Index total = layout.total_dim();
  std::vector<Index> table(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    Index old_flat = 0;
    for (int p = 0; p < n; ++p) {
      const Index digit = (i / new_st[static_cast<std::size_t>(p)]) %
                          new_layout->dim(p);
      old_flat += digit * old_st[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
    }
    table[static_cast<std::size_t>(i)] = old_flat;
  }
  return table;
}

}  // namespace

StateVector permute_parties(const StateVector& psi, const std::vector<int>& perm) {
  PartyLayout new_layout({2, 2});
  const auto table = permutation_table(psi.layout(), perm, &new_layout);
  Vector out(psi.dim());
  for (Index i = 0; i < psi.dim(); ++i) {
    out(i) = psi.amplitudes()(table[static_cast<std::size_t>(i)]);
  }
  return StateVector(std::move(new_layout), std::move(out));
}

DensityOperator permute_parties(const DensityOperator& rho, const std::vector<int>& perm) {
  PartyLayout new_layout({2, 2});
  const auto table = permutation_table(rho.layout(), perm, &new_layout);
  const Index total = rho.dim();
  Matrix out(total, total);
  for (Index i = 0; i < total; ++i) {
    for (Index j = 0; j < total; ++j) {
      out(i, j) = rho.matrix()(table[static_cast<std::size_t>(i)],
                               table[static_cast<std::size_t>(j)]);
    }
  }
  return DensityOperator(std::move(new_layout), std::move(out), rho.tags());
}

StateVector random_state_vector(const PartyLayout& layout, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector v(layout.total_dim());
  for (Index i = 0; i < v.size(); ++i) v(i) = complex_gaussian(rng);
  return StateVector(layout, std::move(v));
}

DensityOperator random_density_operator(const PartyLayout& layout, std::uint64_t seed,
                                        int rank) {
  std::mt19937_64 rng(seed);
  const Index d = layout.total_dim();
  if (rank <= 0) rank = static_cast<int>(std::min<Index>(4, d));
  Matrix m = Matrix::Zero(d, d);
  double weight_sum = 0.0;
  for (int k = 0; k < rank; ++k) {
    Vector v(d);
    for (Index i = 0; i < d; ++i) v(i) = complex_gaussian(rng);
    v.normalize();
    const double w = std::norm(complex_gaussian(rng));
    m += w * (v * v.adjoint());
    weight_sum += w;
  }
  m /= weight_sum;
  return DensityOperator(layout, std::move(m));
}

}  // namespace gmeforge
