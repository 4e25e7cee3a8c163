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

/// Squared Schmidt coefficients: strictly positive, summing to 1 (1e-12).
/// Zero-padding into a larger dimension is deliberately a separate explicit
/// operation (zero_pad) that returns a plain vector.
class SchmidtVector {
 public:
  explicit SchmidtVector(RealVector mu);

  const RealVector& mu() const { return mu_; }
  int dim() const { return static_cast<int>(mu_.size()); }

  static SchmidtVector uniform(int d);

 private:
  RealVector mu_;
};

/// Schmidt weights padded with exact zeros up to dimension d (loses the
/// strict-positivity guarantee, hence the plain return type).
RealVector zero_pad(const SchmidtVector& mu, int d);

/// Two-qudit maximally entangled state, amplitudes 1/sqrt(d) on |ii>.
StateVector max_entangled(int d);

/// d-level GHZ state of N parties: uniform amplitudes on |i>^(x)N.
StateVector ghz_state(int d, int num_parties);

/// Two-qudit maximally entangled state mixed with white noise.  Carries the
/// cited model-region tags (local model for generalized measurements, and
/// A-to-B unsteerability) when p <= p_gm(d).
DensityOperator isotropic(int d, double p);

/// N-qudit Schmidt state: amplitudes sqrt(mu_i) on |i>^(x)N.
StateVector schmidt_state(const SchmidtVector& mu, int num_parties);

/// p |psi_mu><psi_mu| + (1-p) I/d^2; tagged local-model-GM when
/// p <= p_gm_tilde(d).
DensityOperator schmidt_noise_mixture(const SchmidtVector& mu, double p);

/// p |psi_mu><psi_mu| + (1-p) diag(mu) (x) I/d; tagged local-model-GM when
/// p <= p_gm(d).
DensityOperator schmidt_marginal_mixture(const SchmidtVector& mu, double p);

/// Two-qudit pure state whose Schmidt weights are
/// mu_i = C(N,i) C(N,d-1-i) / C(2N,d-1) with N = d-1; it is the seed whose
/// Dicke-isometry extension is the 2N-qubit Dicke state with d-1 excitations.
StateVector dicke_source_state(int d);
SchmidtVector dicke_source_schmidt(int d);

/// Two-qubit Bell-diagonal mixture p phi+ + (1-p) phi-; entangled iff p != 1/2.
DensityOperator bell_diag(double p);

/// Three-qubit state with a hybrid local model (projective measurements on
/// the first party, generalized ones on the others); genuinely entangled,
/// carried as the input-GME-asserted tag.
DensityOperator toth_acin();

/// K-qubit W state and its bit-flipped complement; the incoherent mixture is
/// genuinely entangled for every K (cited, tagged input-GME-asserted).
StateVector w_state(int num_parties);
StateVector w_complement(int num_parties);
DensityOperator w_mixture(int num_parties, double p);

/// Closed form of the copy-isometry extension of the isotropic state:
/// p GHZ_{d,N} + (1-p) P_{d,L} (x) P_{d,N-L} / d^2, where P_{d,L} projects
/// onto span{|i>^(x)L}.  Must match apply_extension bit-for-bit in tests.
DensityOperator example1_state(int d, int num_parties, int left_parties, double p);

/// Closed form of the Dicke-isometry extension of the noisy Dicke source:
/// p |D_{2N,d-1}><D_{2N,d-1}| + (1-p) Psym (x) Psym / d^2 on 2(d-1) qubits.
DensityOperator noisy_dicke(int d, double p);

/// One term of the extended W mixture: the single-block-flipped superposition
/// (1/sqrt(K)) sum_i |hatW>_i (x) prod_{f != i} |W>_f on K blocks of L qubits
/// (roles swapped when `flipped` is true).
StateVector w_extension_term(int num_blocks, int block_qubits, bool flipped);

}  // namespace gmeforge
