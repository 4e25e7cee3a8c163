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

#include "gmeforge/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

namespace gmeforge {

namespace {

std::atomic<Index> g_dim_cap{4096};

std::string join_ints(const std::vector<int>& xs, char sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) os << sep;
    os << xs[i];
  }
  return os.str();
}

}  // namespace

Index dim_cap() { return g_dim_cap.load(); }

void set_dim_cap(Index cap) {
  if (cap < 2) throw ArgumentError("dimension cap must be at least 2");
  g_dim_cap.store(cap);
}

PartyLayout::PartyLayout(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ArgumentError("PartyLayout: no parties");
  const Index cap = dim_cap();
  for (int d : dims_) {
    if (d < 2) throw ArgumentError("PartyLayout: local dimension must be >= 2");
    if (total_ > cap / d) {
      throw CapacityError("PartyLayout: total dimension exceeds cap " +
                          std::to_string(cap) + " (dims " + to_string() + ")");
    }
    total_ *= d;
  }
}

std::string PartyLayout::to_string() const { return join_ints(dims_, 'x'); }

std::vector<Index> strides(const PartyLayout& layout) {
  const int n = layout.num_parties();
  std::vector<Index> s(static_cast<std::size_t>(n), 1);
  for (int k = n - 2; k >= 0; --k) {
    s[static_cast<std::size_t>(k)] =
        s[static_cast<std::size_t>(k + 1)] * layout.dim(k + 1);
  }
  return s;
}

PartyLayout sub_layout(const PartyLayout& layout, const std::vector<int>& parties) {
  std::vector<int> dims;
  dims.reserve(parties.size());
  for (int p : parties) {
    if (p < 0 || p >= layout.num_parties()) {
      throw ArgumentError("party index " + std::to_string(p) + " out of range");
    }
    dims.push_back(layout.dim(p));
  }
  return PartyLayout(std::move(dims));
}

Index sub_dimension(const PartyLayout& layout, const std::vector<int>& parties) {
  Index d = 1;
  for (int p : parties) {
    if (p < 0 || p >= layout.num_parties()) {
      throw ArgumentError("party index " + std::to_string(p) + " out of range");
    }
    d *= layout.dim(p);
  }
  return d;
}

PartyLayout concat(const PartyLayout& a, const PartyLayout& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PartyLayout(std::move(dims));
}

Bipartition::Bipartition(int num_parties, std::vector<int> side)
    : num_parties_(num_parties), side_(std::move(side)) {
  if (num_parties_ < 2) throw ArgumentError("Bipartition: need at least 2 parties");
  std::sort(side_.begin(), side_.end());
  side_.erase(std::unique(side_.begin(), side_.end()), side_.end());
  if (side_.empty() || static_cast<int>(side_.size()) >= num_parties_) {
    throw ArgumentError("Bipartition: side must be a proper nonempty subset");
  }
  for (int p : side_) {
    if (p < 0 || p >= num_parties_) {
      throw ArgumentError("Bipartition: party index out of range");
    }
  }
  std::size_t j = 0;
  for (int p = 0; p < num_parties_; ++p) {
    if (j < side_.size() && side_[j] == p) {
      ++j;
    } else {
      complement_.push_back(p);
    }
  }
}

Bipartition Bipartition::canonical() const {
  if (!side_.empty() && side_.front() == 0) return *this;
  return Bipartition(num_parties_, complement_);
}

std::string Bipartition::to_string() const {
  return join_ints(side_, ',') + "|" + join_ints(complement_, ',');
}

bool Bipartition::operator==(const Bipartition& other) const {
  if (num_parties_ != other.num_parties_) return false;
  return canonical().side() == other.canonical().side();
}

PartitionSpec::PartitionSpec(int num_parties, std::vector<std::vector<int>> groups)
    : num_parties_(num_parties), groups_(std::move(groups)) {
  if (num_parties_ < 1) throw ArgumentError("PartitionSpec: need at least 1 party");
  if (groups_.empty()) throw ArgumentError("PartitionSpec: no groups");
  std::vector<bool> seen(static_cast<std::size_t>(num_parties_), false);
  int covered = 0;
  for (const auto& g : groups_) {
    if (g.empty()) throw ArgumentError("PartitionSpec: empty group");
    for (int p : g) {
      if (p < 0 || p >= num_parties_) {
        throw ArgumentError("PartitionSpec: party index " + std::to_string(p) +
                            " out of range");
      }
      if (seen[static_cast<std::size_t>(p)]) {
        throw ArgumentError("PartitionSpec: party " + std::to_string(p) +
                            " appears in more than one group");
      }
      seen[static_cast<std::size_t>(p)] = true;
      ++covered;
    }
  }
  if (covered != num_parties_) {
    throw ArgumentError("PartitionSpec: groups do not cover all parties");
  }
}

std::string PartitionSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < groups_.size(); ++k) {
    if (k > 0) os << '|';
    os << join_ints(groups_[k], ',');
  }
  return os.str();
}

PartitionSpec PartitionSpec::parse(int num_parties, const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::stringstream group_stream(text);
  std::string group_text;
  while (std::getline(group_stream, group_text, '|')) {
    std::vector<int> group;
    std::stringstream item_stream(group_text);
    std::string item;
    while (std::getline(item_stream, item, ',')) {
      try {
        std::size_t pos = 0;
        int value = std::stoi(item, &pos);
        if (pos != item.size()) throw ArgumentError("trailing characters");
        group.push_back(value);
      } catch (const std::exception&) {
        throw ArgumentError("PartitionSpec: cannot parse party index '" + item +
                            "' in '" + text + "'");
      }
    }
    groups.push_back(std::move(group));
  }
  return PartitionSpec(num_parties, std::move(groups));
}

StateVector::StateVector(PartyLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total_dim()) {
    throw ArgumentError("StateVector: amplitude count " +
                        std::to_string(amplitudes_.size()) +
                        " does not match layout dimension " +
                        std::to_string(layout_.total_dim()));
  }
  const double norm = amplitudes_.norm();
  if (norm < 1e-12) throw ArgumentError("StateVector: zero vector");
  // Keep already-normalized data bit-exact; rescale anything else.
  if (std::abs(norm - 1.0) > 1e-12) amplitudes_ /= norm;
}

Complex StateVector::inner_product(const StateVector& other) const {
  if (layout_ != other.layout_) {
    throw ArgumentError("inner_product: layout mismatch");
  }
  return amplitudes_.dot(other.amplitudes_);
}

DensityOperator::DensityOperator(PartyLayout layout, Matrix matrix,
                                 std::set<std::string> tags)
    : layout_(std::move(layout)), matrix_(std::move(matrix)), tags_(std::move(tags)) {
  const Index d = layout_.total_dim();
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw ArgumentError("DensityOperator: matrix shape does not match layout");
  }
  const double herm = (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) {
    throw ArgumentError("DensityOperator: not Hermitian (residual " +
                        std::to_string(herm) + ")");
  }
  const double tr_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
  if (tr_err > 1e-10) {
    throw ArgumentError("DensityOperator: trace differs from 1 by " +
                        std::to_string(tr_err));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -1e-9) {
    throw ArgumentError("DensityOperator: not positive semidefinite (min eigenvalue " +
                        std::to_string(min_eig) + ")");
  }
}

DensityOperator::DensityOperator(Validated, PartyLayout layout, Matrix matrix,
                                 std::set<std::string> tags)
    : layout_(std::move(layout)), matrix_(std::move(matrix)), tags_(std::move(tags)) {}

std::string DensityOperator::tag_with_prefix(const std::string& prefix) const {
  for (const auto& t : tags_) {
    if (t.rfind(prefix, 0) == 0) return t;
  }
  return {};
}

DensityOperator DensityOperator::with_tag(const std::string& tag) const {
  std::set<std::string> tags = tags_;
  tags.insert(tag);
  return DensityOperator(Validated{}, layout_, matrix_, std::move(tags));
}

DensityOperator DensityOperator::without_tag(const std::string& tag) const {
  std::set<std::string> tags = tags_;
  tags.erase(tag);
  return DensityOperator(Validated{}, layout_, matrix_, std::move(tags));
}

DensityOperator DensityOperator::with_tags(std::set<std::string> tags) const {
  return DensityOperator(Validated{}, layout_, matrix_, std::move(tags));
}

DensityOperator to_density(const StateVector& psi, std::set<std::string> tags) {
  const Vector& a = psi.amplitudes();
  return DensityOperator(psi.layout(), a * a.adjoint(), std::move(tags));
}

}  // namespace gmeforge
