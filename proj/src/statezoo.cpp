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

#include "gmeforge/statezoo.hpp"

#include <cmath>

#include "gmeforge/extend.hpp"
#include "gmeforge/subspace.hpp"
#include "gmeforge/thresholds.hpp"

namespace gmeforge {

namespace {

void require_probability(double p, const char* where) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError(std::string(where) + ": p must lie in [0, 1]");
  }
}

PartyLayout qudit_pair(int d) { return PartyLayout({d, d}); }

PartyLayout qubits(int n) {
  return PartyLayout(std::vector<int>(static_cast<std::size_t>(n), 2));
}

// Flat index of |i>^(x)N in a uniform d-level layout.
Index repeated_ket(int i, int d, int n) {
  Index flat = 0;
  for (int k = 0; k < n; ++k) flat = flat * d + i;
  return flat;
}

// Diagonal projector onto span{|i>^(x)L}.
Matrix copy_span_projector(int d, int copies) {
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(copies), d));
  Matrix p = Matrix::Zero(layout.total_dim(), layout.total_dim());
  for (int i = 0; i < d; ++i) {
    const Index flat = repeated_ket(i, d, copies);
    p(flat, flat) = 1.0;
  }
  return p;
}

std::string block_partition_tag(int left, int right) {
  std::vector<int> g0, g1;
  for (int p = 0; p < left; ++p) g0.push_back(p);
  for (int p = left; p < left + right; ++p) g1.push_back(p);
  return induced_partition_tag(PartitionSpec(left + right, {g0, g1}));
}

}  // namespace

SchmidtVector::SchmidtVector(RealVector mu) : mu_(std::move(mu)) {
  if (mu_.size() < 1) throw ArgumentError("SchmidtVector: empty");
  double sum = 0.0;
  for (Index i = 0; i < mu_.size(); ++i) {
    if (!(mu_(i) > 0.0)) {
      throw ArgumentError("SchmidtVector: weights must be strictly positive");
    }
    sum += mu_(i);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ArgumentError("SchmidtVector: weights must sum to 1 (got " +
                        std::to_string(sum) + ")");
  }
}

SchmidtVector SchmidtVector::uniform(int d) {
  if (d < 1) throw ArgumentError("SchmidtVector::uniform: d must be >= 1");
  return SchmidtVector(RealVector::Constant(d, 1.0 / static_cast<double>(d)));
}

RealVector zero_pad(const SchmidtVector& mu, int d) {
  if (d < mu.dim()) throw ArgumentError("zero_pad: target dimension too small");
  RealVector out = RealVector::Zero(d);
  out.head(mu.dim()) = mu.mu();
  return out;
}

StateVector max_entangled(int d) {
  if (d < 2) throw ArgumentError("max_entangled: dimension must be >= 2");
  PartyLayout layout = qudit_pair(d);
  Vector v = Vector::Zero(layout.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(repeated_ket(i, d, 2)) = amp;
  return StateVector(std::move(layout), std::move(v));
}

StateVector ghz_state(int d, int num_parties) {
  if (d < 2) throw ArgumentError("ghz_state: dimension must be >= 2");
  if (num_parties < 2) throw ArgumentError("ghz_state: need at least 2 parties");
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(num_parties), d));
  Vector v = Vector::Zero(layout.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(repeated_ket(i, d, num_parties)) = amp;
  return StateVector(std::move(layout), std::move(v));
}

DensityOperator isotropic(int d, double p) {
  if (d < 2) throw ArgumentError("isotropic: dimension must be >= 2");
  require_probability(p, "isotropic");
  const StateVector phi = max_entangled(d);
  const Index total = phi.dim();
  Matrix m = p * (phi.amplitudes() * phi.amplitudes().adjoint());
  m += (1.0 - p) / static_cast<double>(total) * Matrix::Identity(total, total);
  std::set<std::string> tags;
  if (p <= p_gm(d)) {
    tags.insert(kTagLocalModelGM);
    tags.insert(kTagUnsteerableAB);
  }
  return DensityOperator(phi.layout(), std::move(m), std::move(tags));
}

StateVector schmidt_state(const SchmidtVector& mu, int num_parties) {
  if (num_parties < 2) throw ArgumentError("schmidt_state: need at least 2 parties");
  const int d = mu.dim();
  if (d < 2) throw ArgumentError("schmidt_state: need at least 2 Schmidt weights");
  PartyLayout layout(std::vector<int>(static_cast<std::size_t>(num_parties), d));
  Vector v = Vector::Zero(layout.total_dim());
  for (int i = 0; i < d; ++i) {
    v(repeated_ket(i, d, num_parties)) = std::sqrt(mu.mu()(i));
  }
  return StateVector(std::move(layout), std::move(v));
}

DensityOperator schmidt_noise_mixture(const SchmidtVector& mu, double p) {
  require_probability(p, "schmidt_noise_mixture");
  const StateVector psi = schmidt_state(mu, 2);
  const Index total = psi.dim();
  Matrix m = p * (psi.amplitudes() * psi.amplitudes().adjoint());
  m += (1.0 - p) / static_cast<double>(total) * Matrix::Identity(total, total);
  std::set<std::string> tags;
  if (p <= p_gm_tilde(mu.dim())) tags.insert(kTagLocalModelGM);
  return DensityOperator(psi.layout(), std::move(m), std::move(tags));
}

DensityOperator schmidt_marginal_mixture(const SchmidtVector& mu, double p) {
  require_probability(p, "schmidt_marginal_mixture");
  const int d = mu.dim();
  const StateVector psi = schmidt_state(mu, 2);
  Matrix m = p * (psi.amplitudes() * psi.amplitudes().adjoint());
  // Noise term diag(mu) (x) I/d.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const Index flat = static_cast<Index>(i) * d + j;
      m(flat, flat) += (1.0 - p) * mu.mu()(i) / static_cast<double>(d);
    }
  }
  std::set<std::string> tags;
  if (p <= p_gm(d)) tags.insert(kTagLocalModelGM);
  return DensityOperator(psi.layout(), std::move(m), std::move(tags));
}

SchmidtVector dicke_source_schmidt(int d) {
  if (d < 2) throw ArgumentError("dicke_source_schmidt: dimension must be >= 2");
  const int n = d - 1;
  RealVector mu(d);
  const double denom = binomial(2 * n, d - 1);
  for (int i = 0; i < d; ++i) {
    mu(i) = binomial(n, i) * binomial(n, d - 1 - i) / denom;
  }
  return SchmidtVector(std::move(mu));
}

StateVector dicke_source_state(int d) {
  return schmidt_state(dicke_source_schmidt(d), 2);
}

DensityOperator bell_diag(double p) {
  require_probability(p, "bell_diag");
  PartyLayout layout = qudit_pair(2);
  Matrix m = Matrix::Zero(4, 4);
  // p phi+ + (1-p) phi- in the {|00>, |11>} block.
  m(0, 0) = 0.5;
  m(3, 3) = 0.5;
  m(0, 3) = p - 0.5;
  m(3, 0) = p - 0.5;
  return DensityOperator(std::move(layout), std::move(m));
}

DensityOperator toth_acin() {
  Matrix id2 = Matrix::Identity(2, 2);
  std::vector<Matrix> pauli(3, Matrix::Zero(2, 2));
  pauli[0] << 0, 1, 1, 0;
  pauli[1] << 0, Complex(0, -1), Complex(0, 1), 0;
  pauli[2] << 1, 0, 0, -1;
  auto kron3 = [](const Matrix& a, const Matrix& b, const Matrix& c) {
    Matrix ab(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ab.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    Matrix abc(8, 8);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) abc.block(2 * i, 2 * j, 2, 2) = ab(i, j) * c;
    return abc;
  };
  Matrix m = Matrix::Identity(8, 8) / 8.0;
  // The B factor of the two-body term enters transposed (x x - y y + z z
  // correlation pattern); with the untransposed pattern the assembly is not
  // positive semidefinite.
  for (int i = 0; i < 3; ++i) {
    m += (kron3(id2, pauli[i].transpose(), pauli[i]) / 3.0 -
          kron3(pauli[i], id2, pauli[i]) / 2.0) / 8.0;
  }
  return DensityOperator(qubits(3), std::move(m),
                         {kTagInputGME, "hybrid-local-model:PM(A),POVM(B,C)"});
}

StateVector w_state(int num_parties) {
  if (num_parties < 2) throw ArgumentError("w_state: need at least 2 parties");
  PartyLayout layout = qubits(num_parties);
  Vector v = Vector::Zero(layout.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(num_parties));
  for (int p = 0; p < num_parties; ++p) {
    v(Index{1} << (num_parties - 1 - p)) = amp;
  }
  return StateVector(std::move(layout), std::move(v));
}

StateVector w_complement(int num_parties) {
  if (num_parties < 2) throw ArgumentError("w_complement: need at least 2 parties");
  PartyLayout layout = qubits(num_parties);
  Vector v = Vector::Zero(layout.total_dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(num_parties));
  const Index ones = (Index{1} << num_parties) - 1;
  for (int p = 0; p < num_parties; ++p) {
    v(ones ^ (Index{1} << (num_parties - 1 - p))) = amp;
  }
  return StateVector(std::move(layout), std::move(v));
}

DensityOperator w_mixture(int num_parties, double p) {
  require_probability(p, "w_mixture");
  const Vector w = w_state(num_parties).amplitudes();
  const Vector wc = w_complement(num_parties).amplitudes();
  Matrix m = p * (w * w.adjoint()) + (1.0 - p) * (wc * wc.adjoint());
  return DensityOperator(qubits(num_parties), std::move(m), {kTagInputGME});
}

DensityOperator example1_state(int d, int num_parties, int left_parties, double p) {
  if (d < 2) throw ArgumentError("example1_state: dimension must be >= 2");
  if (left_parties < 1 || left_parties >= num_parties) {
    throw ArgumentError("example1_state: need 1 <= L < N");
  }
  require_probability(p, "example1_state");
  const int right_parties = num_parties - left_parties;
  const StateVector ghz = ghz_state(d, num_parties);
  const Matrix left = copy_span_projector(d, left_parties);
  const Matrix right = copy_span_projector(d, right_parties);
  Matrix noise(left.rows() * right.rows(), left.rows() * right.rows());
  noise.setZero();
  for (Index i = 0; i < left.rows(); ++i) {
    if (left(i, i) == 0.0) continue;
    for (Index j = 0; j < right.rows(); ++j) {
      if (right(j, j) == 0.0) continue;
      noise(i * right.rows() + j, i * right.rows() + j) = 1.0;
    }
  }
  Matrix m = p * (ghz.amplitudes() * ghz.amplitudes().adjoint()) +
             (1.0 - p) / (static_cast<double>(d) * d) * noise;
  std::set<std::string> tags{block_partition_tag(left_parties, right_parties)};
  if (p <= p_gm(d)) {
    tags.insert(kTagLocalModelGM);
    tags.insert(kTagUnsteerableAB);
  }
  return DensityOperator(ghz.layout(), std::move(m), std::move(tags));
}

DensityOperator noisy_dicke(int d, double p) {
  if (d < 2) throw ArgumentError("noisy_dicke: dimension must be >= 2");
  require_probability(p, "noisy_dicke");
  const int n = d - 1;
  const StateVector dicke = dicke_state(2 * n, d - 1);
  const Matrix psym = symmetric_subspace(n, 2).projector;
  Matrix noise(psym.rows() * psym.rows(), psym.rows() * psym.rows());
  for (Index i = 0; i < psym.rows(); ++i) {
    for (Index j = 0; j < psym.rows(); ++j) {
      noise.block(i * psym.rows(), j * psym.rows(), psym.rows(), psym.rows()) =
          psym(i, j) * psym;
    }
  }
  Matrix m = p * (dicke.amplitudes() * dicke.amplitudes().adjoint()) +
             (1.0 - p) / (static_cast<double>(d) * d) * noise;
  std::set<std::string> tags{block_partition_tag(n, n)};
  if (p <= p_gm_tilde(d)) tags.insert(kTagLocalModelGM);
  return DensityOperator(dicke.layout(), std::move(m), std::move(tags));
}

StateVector w_extension_term(int num_blocks, int block_qubits, bool flipped) {
  if (num_blocks < 2) throw ArgumentError("w_extension_term: need at least 2 blocks");
  const Vector w = w_state(block_qubits).amplitudes();
  const Vector wc = w_complement(block_qubits).amplitudes();
  const Index block_dim = w.size();
  PartyLayout layout = qubits(num_blocks * block_qubits);
  Vector out = Vector::Zero(layout.total_dim());
  for (int special = 0; special < num_blocks; ++special) {
    Vector term = Vector::Ones(1);
    for (int b = 0; b < num_blocks; ++b) {
      const Vector& factor = ((b == special) != flipped) ? wc : w;
      Vector next(term.size() * block_dim);
      for (Index i = 0; i < term.size(); ++i) {
        next.segment(i * block_dim, block_dim) = term(i) * factor;
      }
      term = std::move(next);
    }
    out += term;
  }
  out /= std::sqrt(static_cast<double>(num_blocks));
  return StateVector(std::move(layout), std::move(out));
}

}  // namespace gmeforge
