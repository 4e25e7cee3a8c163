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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gmeforge/certify.hpp"
#include "gmeforge/extend.hpp"
#include "gmeforge/hilbert.hpp"
#include "test_support.hpp"

using namespace gmeforge;

namespace {

PartyLayout qubits(int n) {
  return PartyLayout(std::vector<int>(static_cast<std::size_t>(n), 2));
}

Certificate certify_example1(double p) {
  const DensityOperator sigma = example1_state(2, 4, 2, p);
  const Bipartition cut(4, {0, 1});
  const auto ps = group_projector(sigma.layout(), {0, 1}, SubspaceKind::Symmetric);
  return certify_gme_bipartite(sigma, cut, ps, ps);
}

}  // namespace

TEST_CASE("bipartite certification of the isotropic extension") {
  CHECK(certify_example1(0.4).verdict == Verdict::GmeCertified);
  CHECK(certify_example1(0.2).verdict == Verdict::Inconclusive);
  CHECK(certify_example1(0.2).support_residual <= 1e-10);
}

TEST_CASE("verdict flips exactly once, at p = 1/3") {
  bool seen_certified = false;
  for (int i = 0; i <= 50; ++i) {
    const double p = i / 50.0;
    const bool certified = certify_example1(p).verdict == Verdict::GmeCertified;
    if (seen_certified) CHECK(certified);  // no flip back
    seen_certified = seen_certified || certified;
  }
  CHECK(seen_certified);
  double lo = 0.30, hi = 0.41;
  REQUIRE(certify_example1(lo).verdict == Verdict::Inconclusive);
  REQUIRE(certify_example1(hi).verdict == Verdict::GmeCertified);
  while (hi - lo > 1e-5) {
    const double mid = 0.5 * (lo + hi);
    (certify_example1(mid).verdict == Verdict::GmeCertified ? hi : lo) = mid;
  }
  CHECK(std::abs(hi - 1.0 / 3.0) <= 1e-3);
}

TEST_CASE("Bell-diagonal extension certification") {
  const auto certify_bell = [](double p) {
    const DensityOperator sigma =
        apply_extension(bell_diag(p), {copy_isometry(2, 1), copy_isometry(2, 2)});
    const Bipartition cut(3, {0});
    const auto p0 = group_projector(sigma.layout(), {0}, SubspaceKind::Symmetric);
    const auto p12 = group_projector(sigma.layout(), {1, 2}, SubspaceKind::Symmetric);
    return certify_gme_bipartite(sigma, cut, p0, p12);
  };
  const Certificate at_half = certify_bell(0.5);
  CHECK(at_half.verdict == Verdict::Inconclusive);
  CHECK(at_half.cut_evidence.front().min_pt_eigenvalue >= -1e-10);
  CHECK(certify_bell(0.7).verdict == Verdict::GmeCertified);
}

TEST_CASE("GES extension is certified through GES projectors") {
  const DensityOperator sigma =
      apply_extension(isotropic(2, 0.6), {ges_isometry(3), ges_isometry(3)});
  const Bipartition cut(6, {0, 1, 2});
  const auto pg = group_projector(sigma.layout(), {0, 1, 2}, SubspaceKind::GES);
  const Certificate cert = certify_gme_bipartite(sigma, cut, pg, pg);
  CHECK(cert.verdict == Verdict::GmeCertified);
  CHECK(cert.support_residual <= 1e-10);
}

TEST_CASE("support violation is never promoted to a certificate") {
  // phi+ on parties (0,2) and phi- on parties (1,3): NPT across {0,1}|{2,3}
  // but not supported on the symmetric product subspace.
  const StateVector bell_plus = max_entangled(2);
  Vector minus_amp = Vector::Zero(4);
  minus_amp(0) = 1.0 / std::sqrt(2.0);
  minus_amp(3) = -1.0 / std::sqrt(2.0);
  const StateVector bell_minus(qubits(2), minus_amp);
  const StateVector interleaved =
      permute_parties(tensor_compose(bell_plus, bell_minus), {0, 2, 1, 3});
  const DensityOperator sigma = to_density(interleaved);
  const Bipartition cut(4, {0, 1});
  const auto ps = group_projector(sigma.layout(), {0, 1}, SubspaceKind::Symmetric);
  const Certificate cert = certify_gme_bipartite(sigma, cut, ps, ps);
  CHECK(cert.support_residual > 1e-8);
  CHECK(cert.cut_evidence.front().min_pt_eigenvalue < -1e-9);  // NPT, yet...
  CHECK(cert.verdict == Verdict::Inconclusive);                // ...no certificate
}

TEST_CASE("custom projector kinds are rejected") {
  const DensityOperator sigma = example1_state(2, 4, 2, 0.4);
  const Bipartition cut(4, {0, 1});
  const ProjectorWithKind custom{Matrix::Identity(4, 4), SubspaceKind::Custom};
  const auto ps = group_projector(sigma.layout(), {0, 1}, SubspaceKind::Symmetric);
  CHECK_THROWS_AS(certify_gme_bipartite(sigma, cut, custom, ps), ArgumentError);
}

TEST_CASE("multipartition certification is tag-gated for K > 2") {
  const std::vector<IsometryMap> maps(3, copy_isometry(2, 2));
  const DensityOperator sigma = apply_extension(toth_acin(), maps);
  const PartitionSpec partition(6, {{0, 1}, {2, 3}, {4, 5}});
  std::vector<ProjectorWithKind> projectors;
  for (int g = 0; g < 3; ++g) {
    projectors.push_back(
        group_projector(sigma.layout(), partition.group(g), SubspaceKind::Symmetric));
  }
  const Certificate with_tag = certify_gme_multipartition(sigma, partition, projectors);
  CHECK(with_tag.verdict == Verdict::GmeCertified);
  CHECK(with_tag.support_residual <= 1e-10);
  CHECK(with_tag.cut_evidence.size() == 3);

  const Certificate without_tag = certify_gme_multipartition(
      sigma.without_tag(kTagInputGME), partition, projectors);
  CHECK(without_tag.verdict == Verdict::Inconclusive);
  CHECK(without_tag.cut_evidence.size() == 3);
}

TEST_CASE("pure states pass the multipartition rule directly") {
  const DensityOperator ghz = to_density(ghz_state(2, 6));
  const PartitionSpec partition(6, {{0, 1}, {2, 3}, {4, 5}});
  std::vector<ProjectorWithKind> projectors;
  for (int g = 0; g < 3; ++g) {
    projectors.push_back(
        group_projector(ghz.layout(), partition.group(g), SubspaceKind::Symmetric));
  }
  const Certificate cert = certify_gme_multipartition(ghz, partition, projectors);
  CHECK(cert.verdict == Verdict::GmeCertified);
}

TEST_CASE("pure_gme_check named cases and oracle agreement") {
  CHECK(pure_gme_check(ghz_state(2, 4)));
  CHECK(pure_gme_check(dicke_state(4, 2)));
  CHECK_FALSE(pure_gme_check(StateVector(qubits(4), Vector::Unit(16, 0))));
  const StateVector double_bell = tensor_compose(max_entangled(2), max_entangled(2));
  CHECK_FALSE(pure_gme_check(double_bell));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StateVector psi = random_state_vector(qubits(4), 900 + seed);
    bool oracle = true;
    for (const auto& cut : enumerate_bipartitions(4)) {
      if (test::oracle_schmidt_rank(psi, cut.side()) < 2) {
        oracle = false;
        break;
      }
    }
    CHECK(pure_gme_check(psi) == oracle);
  }
}

TEST_CASE("threshold formulas") {
  CHECK(theta(SchmidtVector::uniform(2)) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p_sep_threshold(SchmidtVector::uniform(2), 2) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(p_sep_threshold(SchmidtVector::uniform(3), 3) ==
        doctest::Approx(0.25).epsilon(1e-12));
  const SchmidtVector skew((RealVector(2) << 0.8, 0.2).finished());
  CHECK(theta(skew) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(p_sep_threshold(skew, 2) == doctest::Approx(1.0 / 2.6).epsilon(1e-12));

  for (int d = 2; d <= 8; ++d) {
    CHECK(p_sep_threshold(SchmidtVector::uniform(d), d) ==
          doctest::Approx(1.0 / (d + 1.0)).epsilon(1e-12));
  }

  CHECK(theta_dicke(2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(theta_dicke(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  for (int d = 2; d <= 8; ++d) {
    // Brute-force pair maximum over the Dicke-source weights is the oracle.
    CHECK(theta_dicke(d) ==
          doctest::Approx(theta(dicke_source_schmidt(d))).epsilon(1e-12));
  }

  CHECK(p_gm(2) == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
  CHECK(p_gm(3) == doctest::Approx(8.0 / 27.0).epsilon(1e-12));
  CHECK(p_gm_tilde(2) == doctest::Approx(5.0 / 19.0).epsilon(1e-12));
}

TEST_CASE("classification windows per family") {
  WindowParams iso;
  iso.d = 2;
  const ThresholdReport r_iso =
      classification_window(Family::IsotropicExtension, iso);
  CHECK(r_iso.windows.front().lower == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r_iso.windows.front().upper == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
  CHECK_FALSE(r_iso.windows.front().empty);

  // White-noise family at the theta supremum: empty for every scanned d.
  for (int d = 2; d <= 8; ++d) {
    WindowParams wn;
    wn.d = d;
    wn.theta = 0.5;
    const ThresholdReport r =
        classification_window(Family::SchmidtWhitenoiseExtension, wn);
    CHECK(r.windows.front().empty);
  }

  // Marginal-noise family: nonempty for d = 3 with the skewed weights.
  WindowParams marginal;
  marginal.d = 3;
  marginal.mu = (RealVector(3) << 0.49, 0.49, 0.02).finished();
  const ThresholdReport r_m =
      classification_window(Family::SchmidtMarginalExtension, marginal);
  CHECK_FALSE(r_m.windows.front().empty);
  CHECK(r_m.windows.front().upper == doctest::Approx(8.0 / 27.0).epsilon(1e-12));
  // The onset of negativity for this family sits at 1/(d+1) independent of mu;
  // the bisection is required to find it to 1e-6.
  CHECK(std::abs(r_m.windows.front().lower - 0.25) <= 2e-6);

  WindowParams ges;
  ges.n = 3;
  const ThresholdReport r_g = classification_window(Family::GesExtension, ges);
  CHECK(r_g.d == 2);
  CHECK(r_g.windows.front().lower == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(parse_family("unknown"), ArgumentError);
  WindowParams missing_mu;
  missing_mu.d = 3;
  CHECK_THROWS_AS(classification_window(Family::SchmidtMarginalExtension, missing_mu),
                  ArgumentError);
}

TEST_CASE("PT evidence is stable under relabeling within a group") {
  // Relabeling inside a group is a local unitary with respect to the cut, so
  // the transpose spectra cannot move.  The GES support condition, unlike the
  // symmetric one, is NOT permutation invariant, so only the evidence (not
  // the verdict) is asserted for GES kinds.
  const DensityOperator sigma =
      apply_extension(isotropic(2, 0.6), {ges_isometry(3), ges_isometry(3)});
  const DensityOperator relabeled = permute_parties(sigma, {2, 0, 1, 3, 4, 5});
  const PartitionSpec partition(6, {{0, 1, 2}, {3, 4, 5}});
  std::vector<ProjectorWithKind> projectors{
      group_projector(sigma.layout(), {0, 1, 2}, SubspaceKind::GES),
      group_projector(sigma.layout(), {3, 4, 5}, SubspaceKind::GES)};
  const Certificate a = certify_gme_multipartition(sigma, partition, projectors);
  const Certificate b = certify_gme_multipartition(relabeled, partition, projectors);
  REQUIRE(a.cut_evidence.size() == b.cut_evidence.size());
  for (std::size_t i = 0; i < a.cut_evidence.size(); ++i) {
    CHECK(std::abs(a.cut_evidence[i].min_pt_eigenvalue -
                   b.cut_evidence[i].min_pt_eigenvalue) <= 1e-10);
  }
  CHECK(a.verdict == Verdict::GmeCertified);
  CHECK(b.support_residual > kSupportTolerance);  // canonical GES moved away

  // With symmetric kinds the verdict is relabeling-stable as well.
  const DensityOperator sym_sigma = example1_state(2, 4, 2, 0.4);
  const DensityOperator sym_relab = permute_parties(sym_sigma, {1, 0, 2, 3});
  const PartitionSpec sym_partition(4, {{0, 1}, {2, 3}});
  std::vector<ProjectorWithKind> sym_projectors{
      group_projector(sym_sigma.layout(), {0, 1}, SubspaceKind::Symmetric),
      group_projector(sym_sigma.layout(), {2, 3}, SubspaceKind::Symmetric)};
  const Certificate sa =
      certify_gme_multipartition(sym_sigma, sym_partition, sym_projectors);
  const Certificate sb =
      certify_gme_multipartition(sym_relab, sym_partition, sym_projectors);
  CHECK(sa.verdict == sb.verdict);
  CHECK(std::abs(sa.cut_evidence.front().min_pt_eigenvalue -
                 sb.cut_evidence.front().min_pt_eigenvalue) <= 1e-10);
}

TEST_CASE("steering transfer propagates the cited region") {
  const DensityOperator sigma =
      apply_extension(isotropic(2, 0.4), {copy_isometry(2, 2), copy_isometry(2, 2)});
  REQUIRE(sigma.has_tag(kTagUnsteerableAB));
  const SteeringTransferResult result = steering_transfer(sigma);
  CHECK(result.applied);
  CHECK(result.state.has_tag("unsteerable:0,1->2,3"));

  // Seed outside the cited region carries no tag; transfer is a no-op.
  const DensityOperator hot =
      apply_extension(isotropic(2, 0.9), {copy_isometry(2, 2), copy_isometry(2, 2)});
  CHECK_FALSE(hot.has_tag(kTagUnsteerableAB));
  const SteeringTransferResult noop = steering_transfer(hot);
  CHECK_FALSE(noop.applied);
  CHECK(noop.state.tags() == hot.tags());

  // Multi-group extensions tag the first induced group against the rest.
  const DensityOperator untagged_seed = toth_acin().with_tag(kTagUnsteerableAB);
  const DensityOperator multi =
      apply_extension(untagged_seed, {copy_isometry(2, 2), copy_isometry(2, 2),
                                      copy_isometry(2, 2)});
  const SteeringTransferResult m = steering_transfer(multi);
  CHECK(m.applied);
  CHECK(m.state.has_tag("unsteerable:0,1->2,3,4,5"));
}
