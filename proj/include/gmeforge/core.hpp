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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

/// Dense multiparty quantum state toolkit.
///
/// Indexing convention used everywhere: computational-basis kets are
/// enumerated row-major in party order, i.e. party 0 is the most significant
/// mixed-radix digit.  flat(i_0,...,i_{N-1}) = sum_k i_k * stride_k with
/// stride_{N-1} = 1 and stride_k = prod_{j>k} d_j.  Tensor products follow
/// the matching Kronecker convention: flat(a (x) b) = flat(a) * dim(b) + flat(b).
namespace gmeforge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = std::int64_t;

/// Caller-fixable contract violation (bad dimension, malformed spec, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested object exceeds the configured dense-dimension cap.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical precondition failed (e.g. non-Hermitian eigensolver input).
struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Global cap on the total Hilbert-space dimension of any constructed value.
/// The toolkit is a dense desk-scale instrument: it fails loudly with
/// CapacityError instead of switching representations.
Index dim_cap();
void set_dim_cap(Index cap);

/// Ordered local dimensions of the parties.  Every entry is >= 2 and the
/// total dimension (product of entries) must not exceed dim_cap().
class PartyLayout {
 public:
  explicit PartyLayout(std::vector<int> dims);

  int num_parties() const { return static_cast<int>(dims_.size()); }
  int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
  const std::vector<int>& dims() const { return dims_; }
  Index total_dim() const { return total_; }

  bool operator==(const PartyLayout& other) const { return dims_ == other.dims_; }
  bool operator!=(const PartyLayout& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<int> dims_;
  Index total_ = 1;
};

/// Mixed-radix strides per party; stride of the last party is 1.
std::vector<Index> strides(const PartyLayout& layout);

/// Layout restricted to the given parties, in the order listed.
PartyLayout sub_layout(const PartyLayout& layout, const std::vector<int>& parties);

/// Product of local dimensions over the given parties.
Index sub_dimension(const PartyLayout& layout, const std::vector<int>& parties);

/// Concatenation of two layouts (left parties first).
PartyLayout concat(const PartyLayout& a, const PartyLayout& b);

/// An unordered two-way split of the parties, stored as one side plus its
/// complement (both sorted ascending).
class Bipartition {
 public:
  Bipartition(int num_parties, std::vector<int> side);

  int num_parties() const { return num_parties_; }
  const std::vector<int>& side() const { return side_; }
  const std::vector<int>& complement() const { return complement_; }

  /// Same split with the side chosen so that it contains party 0.
  Bipartition canonical() const;

  /// "0,1|2,3" with the stored side first.
  std::string to_string() const;

  bool operator==(const Bipartition& other) const;

 private:
  int num_parties_;
  std::vector<int> side_;
  std::vector<int> complement_;
};

/// K disjoint nonempty groups of party indices covering 0..N-1.  Group order
/// and in-group party order are preserved as given.
class PartitionSpec {
 public:
  PartitionSpec(int num_parties, std::vector<std::vector<int>> groups);

  int num_parties() const { return num_parties_; }
  int num_groups() const { return static_cast<int>(groups_.size()); }
  const std::vector<int>& group(int k) const { return groups_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::vector<int>>& groups() const { return groups_; }

  /// "0,1|2,3|4"
  std::string to_string() const;

  /// Parse the textual form produced by to_string().
  static PartitionSpec parse(int num_parties, const std::string& text);

 private:
  int num_parties_;
  std::vector<std::vector<int>> groups_;
};

// Provenance tags carried by density operators.  Tags are cited metadata,
// never verified claims: the toolkit propagates model regions, it does not
// construct local models.
inline constexpr const char* kTagLocalModelGM = "local-model-GM";
inline constexpr const char* kTagUnsteerableAB = "A-to-B-unsteerable";
inline constexpr const char* kTagInputGME = "input-GME-asserted";
inline constexpr const char* kTagInducedPartitionPrefix = "induced-partition:";
inline constexpr const char* kTagUnsteerablePrefix = "unsteerable:";

/// Pure multiparty state.  Constructors leave amplitudes untouched when the
/// norm is already 1 within 1e-12 and rescale otherwise, so the unit-norm
/// invariant always holds and serialized states round-trip bit-exactly.
class StateVector {
 public:
  StateVector(PartyLayout layout, Vector amplitudes);

  const PartyLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Index dim() const { return layout_.total_dim(); }

  Complex inner_product(const StateVector& other) const;

 private:
  PartyLayout layout_;
  Vector amplitudes_;
};

/// Mixed multiparty state with provenance tags.  Construction validates
/// Hermiticity (1e-10, max-abs), unit trace (1e-10) and positivity
/// (min eigenvalue >= -1e-9); the matrix itself is never modified.
class DensityOperator {
 public:
  DensityOperator(PartyLayout layout, Matrix matrix,
                  std::set<std::string> tags = {});

  const PartyLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }
  Index dim() const { return layout_.total_dim(); }

  const std::set<std::string>& tags() const { return tags_; }
  bool has_tag(const std::string& tag) const { return tags_.count(tag) > 0; }

  /// Returns the first tag starting with `prefix`, or empty string.
  std::string tag_with_prefix(const std::string& prefix) const;

  DensityOperator with_tag(const std::string& tag) const;
  DensityOperator without_tag(const std::string& tag) const;
  DensityOperator with_tags(std::set<std::string> tags) const;

 private:
  struct Validated {};
  DensityOperator(Validated, PartyLayout layout, Matrix matrix,
                  std::set<std::string> tags);

  PartyLayout layout_;
  Matrix matrix_;
  std::set<std::string> tags_;
};

/// |psi><psi| with optional tags.
DensityOperator to_density(const StateVector& psi, std::set<std::string> tags = {});

}  // namespace gmeforge
