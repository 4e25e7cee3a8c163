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

#include <optional>
#include <string>
#include <vector>

#include "gmeforge/core.hpp"
#include "gmeforge/statezoo.hpp"
#include "gmeforge/subspace.hpp"
#include "gmeforge/thresholds.hpp"

namespace gmeforge {

// Decision rules, in brief.  A state supported on a product of symmetric or
// genuinely entangled group subspaces is genuinely multipartite entangled as
// soon as it is entangled across the induced cut (two groups) or is itself
// the extension of a genuinely entangled input (more groups).  Negativity
// under partial transposition is the only entanglement oracle used, so PPT
// evidence is never conclusive in either direction.

enum class Verdict { GmeCertified, BiseparablePossible, Inconclusive };

std::string to_string(Verdict v);

/// Support-condition tolerance used by the certifiers; looser than the
/// 1e-10 construction residual so user-supplied states are not rejected for
/// serialization noise.
inline constexpr double kSupportTolerance = 1e-8;

/// A partial-transpose eigenvalue below this certifies entanglement across
/// the transposed cut.
inline constexpr double kNegativityCutoff = -1e-9;

struct CutEvidence {
  Bipartition cut;
  double min_pt_eigenvalue;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  double support_residual = 0.0;
  std::vector<CutEvidence> cut_evidence;
  std::vector<SubspaceKind> basis_kinds;
  std::vector<std::string> notes;
};

struct ProjectorWithKind {
  Matrix projector;
  SubspaceKind kind;
};

/// Projector onto the group's certification subspace: the full symmetric
/// subspace for kind `sym`, the canonical genuinely entangled subspace for
/// kind `ges` (qubit groups of >= 3 parties).
ProjectorWithKind group_projector(const PartyLayout& layout,
                                  const std::vector<int>& group, SubspaceKind kind);

/// Two-group criterion: with both group supports symmetric or genuinely
/// entangled, negativity across the cut certifies genuine multipartite
/// entanglement.  PPT yields Inconclusive; a failed support condition always
/// yields Inconclusive regardless of the transpose evidence.
Certificate certify_gme_bipartite(const DensityOperator& sigma, const Bipartition& cut,
                                  const ProjectorWithKind& side_projector,
                                  const ProjectorWithKind& complement_projector);

/// K-group criterion.  Evidence (support residual and the minimum
/// partial-transpose eigenvalue on every union-of-groups cut) is always
/// reported.  For K = 2 this reduces to the bipartite rule.  For K > 2 the
/// verdict is GME-certified only when the support condition holds and either
/// the state carries the input-GME-asserted tag (extension of a genuinely
/// entangled input) or it is pure and passes pure_gme_check; negativity on
/// all union cuts alone is reported but never promoted to a proof.
Certificate certify_gme_multipartition(const DensityOperator& sigma,
                                       const PartitionSpec& partition,
                                       const std::vector<ProjectorWithKind>& projectors);

/// True iff the pure state has Schmidt rank >= 2 across every bipartition of
/// its parties.
bool pure_gme_check(const StateVector& psi);

inline double theta(const SchmidtVector& mu) { return theta(mu.mu()); }
inline double p_sep_threshold(const SchmidtVector& mu, int d) {
  return p_sep_threshold(mu.mu(), d);
}

/// Half-open parameter interval (lower, upper] unless flagged otherwise.
struct Window {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
  bool lower_inclusive = false;
  bool upper_inclusive = true;
  bool empty = false;
};

struct ThresholdReport {
  int d = 0;
  double p_sep = 0.0;
  double p_gm = 0.0;
  double p_gm_tilde = 0.0;
  double theta = 0.0;
  std::vector<Window> windows;
  std::vector<std::string> notes;
};

enum class Family {
  IsotropicExtension,
  SchmidtWhitenoiseExtension,
  SchmidtMarginalExtension,
  GesExtension,
};

Family parse_family(const std::string& name);
std::string to_string(Family family);

struct WindowParams {
  int d = 0;                        // seed dimension (ges: derived from n)
  int n = 0;                        // ges family: output qubits per side
  std::optional<RealVector> mu;     // Schmidt weights where applicable
  std::optional<double> theta;      // direct theta override (whitenoise scans)
};

/// Interval of mixing parameters where the extended family is certified
/// genuinely entangled yet carries a cited bilocal model.  Empty intervals
/// are flagged, never clamped.  The marginal-noise family has no closed-form
/// entanglement onset; it is located by bisection on the minimum
/// partial-transpose eigenvalue to 1e-6 in p.
ThresholdReport classification_window(Family family, const WindowParams& params);

struct SteeringTransferResult {
  DensityOperator state;
  bool applied = false;
  std::string note;
};

/// Propagate cited unsteerability through an isometric extension: when the
/// input carried the A-to-B-unsteerable tag and the state records an induced
/// partition, tag the induced cut (first group versus the rest) as
/// unsteerable.  Missing provenance is a no-op with a warning note; nothing
/// numeric is computed.
SteeringTransferResult steering_transfer(const DensityOperator& sigma);

}  // namespace gmeforge
