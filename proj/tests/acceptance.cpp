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

// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmeforge/certify.hpp"
#include "gmeforge/extend.hpp"
#include "gmeforge/hilbert.hpp"
#include "gmeforge/io.hpp"
#include "gmeforge/statezoo.hpp"
#include "test_support.hpp"

using namespace gmeforge;
namespace fs = std::filesystem;

namespace {

struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

PartyLayout qubits(int n) {
  return PartyLayout(std::vector<int>(static_cast<std::size_t>(n), 2));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// ---- criterion bodies ------------------------------------------------------

void criterion_dicke_identity(Checker& c) {
  for (int d : {3, 4, 5}) {
    const StateVector out = apply_extension(
        dicke_source_state(d), {dicke_isometry(d), dicke_isometry(d, true)});
    const StateVector target = dicke_state(2 * (d - 1), d - 1);
    const double dist = (out.amplitudes() - target.amplitudes()).norm();
    c.expect(dist <= 1e-12, "d=" + std::to_string(d) + " distance " + fmt(dist));
  }
}

void criterion_closed_form_vs_pipeline(Checker& c) {
  struct Case { int d, n, l; };
  for (const Case cs : {Case{2, 4, 2}, Case{3, 4, 2}, Case{2, 5, 2}}) {
    for (double p : {0.0, 0.4, 1.0}) {
      const DensityOperator closed = example1_state(cs.d, cs.n, cs.l, p);
      const DensityOperator piped = apply_extension(
          isotropic(cs.d, p),
          {copy_isometry(cs.d, cs.l), copy_isometry(cs.d, cs.n - cs.l)});
      const double dist = (closed.matrix() - piped.matrix()).norm();
      c.expect(dist <= 1e-12, "example1 d=" + std::to_string(cs.d) + " N=" +
                                  std::to_string(cs.n) + " p=" + fmt(p) +
                                  " distance " + fmt(dist));
    }
  }
  for (int d : {3, 4}) {
    for (double p : {0.0, 0.55, 1.0}) {
      const DensityOperator closed = noisy_dicke(d, p);
      const DensityOperator piped =
          apply_extension(schmidt_noise_mixture(dicke_source_schmidt(d), p),
                          {dicke_isometry(d), dicke_isometry(d, true)});
      const double dist = (closed.matrix() - piped.matrix()).norm();
      c.expect(dist <= 1e-12, "noisy_dicke d=" + std::to_string(d) + " p=" + fmt(p) +
                                  " distance " + fmt(dist));
    }
  }
}

void criterion_pt_transfer(Checker& c) {
  struct Case {
    int d;
    std::uint64_t seed;
    std::vector<IsometryMap> maps;
  };
  std::vector<Case> cases;
  for (std::uint64_t s = 0; s < 8; ++s) {
    cases.push_back({2, 300 + s, {copy_isometry(2, 2), copy_isometry(2, 3)}});
  }
  for (std::uint64_t s = 0; s < 6; ++s) {
    cases.push_back({3, 400 + s, {copy_isometry(3, 2), copy_isometry(3, 3)}});
  }
  for (std::uint64_t s = 0; s < 6; ++s) {
    cases.push_back({2, 500 + s, {ges_isometry(3), w_isometry(3)}});
  }
  int index = 0;
  for (const auto& cs : cases) {
    const StateVector psi = random_state_vector(PartyLayout({cs.d, cs.d}), cs.seed);
    const Index dd = psi.dim();
    Matrix m = 0.92 * (psi.amplitudes() * psi.amplitudes().adjoint()) +
               0.08 / static_cast<double>(dd) * Matrix::Identity(dd, dd);
    const DensityOperator rho(PartyLayout({cs.d, cs.d}), std::move(m));
    const double seed_min = min_eigenvalue_hermitian(partial_transpose(rho, {1}));
    c.expect(seed_min < -1e-4, "case " + std::to_string(index) + ": seed not NPT");

    const DensityOperator sigma = apply_extension(rho, cs.maps);
    c.expect(sigma.dim() <= 243, "case " + std::to_string(index) + ": output too big");
    const std::vector<int> cut_side = induced_partition(cs.maps).group(1);
    const double ext_min =
        min_eigenvalue_hermitian(partial_transpose(sigma, cut_side));
    c.expect(std::abs(seed_min - ext_min) <= 1e-10,
             "case " + std::to_string(index) + ": min PT " + fmt(seed_min) + " vs " +
                 fmt(ext_min));
    ++index;
  }
}

void criterion_isotropic_boundary(Checker& c) {
  for (int d : {2, 3}) {
    const DensityOperator rho = isotropic(d, 1.0 / (d + 1.0));
    const double min_pt = min_eigenvalue_hermitian(partial_transpose(rho, {1}));
    c.expect(std::abs(min_pt) <= 1e-10,
             "d=" + std::to_string(d) + " |min PT| = " + fmt(std::abs(min_pt)));
  }
}

void criterion_threshold_table(Checker& c) {
  c.expect(std::abs(p_gm(2) - 5.0 / 12.0) <= 1e-12, "p_gm(2)");
  c.expect(std::abs(p_gm(3) - 8.0 / 27.0) <= 1e-12, "p_gm(3)");
  c.expect(std::abs(p_gm_tilde(2) - 5.0 / 19.0) <= 1e-12, "p_gm_tilde(2)");
  c.expect(std::abs(theta_dicke(2) - 0.5) <= 1e-12, "theta_ev(2)");
  c.expect(std::abs(theta_dicke(3) - 1.0 / 3.0) <= 1e-12, "theta_odd(3)");
  for (int d = 2; d <= 8; ++d) {
    const double brute = theta(dicke_source_schmidt(d));
    c.expect(std::abs(theta_dicke(d) - brute) <= 1e-12,
             "theta_dicke(" + std::to_string(d) + ") vs brute force");
  }
}

Verdict example1_verdict(double p) {
  const DensityOperator sigma = example1_state(2, 4, 2, p);
  const auto ps = group_projector(sigma.layout(), {0, 1}, SubspaceKind::Symmetric);
  return certify_gme_bipartite(sigma, Bipartition(4, {0, 1}), ps, ps).verdict;
}

void criterion_gme_window(Checker& c) {
  for (double p : {0.34, 0.41}) {
    c.expect(example1_verdict(p) == Verdict::GmeCertified,
             "p=" + fmt(p) + " expected GME-certified");
  }
  for (double p : {0.30, 0.33}) {
    c.expect(example1_verdict(p) == Verdict::Inconclusive,
             "p=" + fmt(p) + " expected Inconclusive");
  }
  double lo = 0.30, hi = 0.41;
  while (hi - lo > 1e-5) {
    const double mid = 0.5 * (lo + hi);
    (example1_verdict(mid) == Verdict::GmeCertified ? hi : lo) = mid;
  }
  c.expect(std::abs(hi - 1.0 / 3.0) <= 1e-3,
           "verdict transition at " + fmt(hi) + ", expected 1/3 within 1e-3");
}

void criterion_ges_suite(Checker& c) {
  const SubspaceBasis basis = ges_basis(3);
  c.expect(basis.dimension() == 2, "dimension");
  Vector phi0 = Vector::Zero(8);
  phi0(1) = phi0(2) = 1.0 / std::sqrt(3.0);
  phi0(4) = -1.0 / std::sqrt(3.0);
  c.expect((basis.columns().col(0) - phi0).norm() <= 1e-12, "first column");
  const Matrix gram = basis.columns().adjoint() * basis.columns();
  c.expect((gram - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12, "Gram");

  for (int n : {3, 4}) {
    const SubspaceBasis b = ges_basis(n);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const StateVector sample = sample_subspace_vector(b, seed);
      for (const auto& cut : enumerate_bipartitions(n)) {
        if (schmidt_decomposition(sample, cut).rank < 2) {
          c.expect(false, "n=" + std::to_string(n) + " seed " + std::to_string(seed) +
                              " product across " + cut.to_string());
        }
      }
    }
  }

  // Documented discrepancy: the cited companion basis candidate
  // (3/2, 1, -1/2, -3/2, 1/2)/sqrt(6) on kets 001,010,011,100,101 is not
  // orthogonal to the first column; the canonical basis therefore comes from
  // Gram-Schmidt instead of taking that candidate verbatim.
  Vector phi1_candidate = Vector::Zero(8);
  phi1_candidate(1) = 1.5 / std::sqrt(6.0);
  phi1_candidate(2) = 1.0 / std::sqrt(6.0);
  phi1_candidate(3) = -0.5 / std::sqrt(6.0);
  phi1_candidate(4) = -1.5 / std::sqrt(6.0);
  phi1_candidate(5) = 0.5 / std::sqrt(6.0);
  const Complex overlap = (basis.columns().col(0).adjoint() * phi1_candidate)(0, 0);
  c.expect(std::abs(overlap) > 0.9,
           "candidate overlap " + fmt(std::abs(overlap)) + " expected > 0.9");
}

void criterion_symmetric_support_violation(Checker& c) {
  // 4-qubit vectors product across {0,2}|{1,3} but entangled across
  // {0,1}|{2,3} must violate the symmetric support condition on {0,1}.
  const Matrix psym =
      embed_operator(qubits(4), {0, 1}, symmetric_subspace(2, 2).projector);
  int tested = 0;
  std::uint64_t seed = 0;
  while (tested < 200) {
    const StateVector psi_t = random_state_vector(qubits(2), 7000 + seed);
    const StateVector phi_t = random_state_vector(qubits(2), 8000 + seed);
    ++seed;
    const StateVector joint = tensor_compose(psi_t, phi_t);
    // Parties of the first factor go to 0 and 2, of the second to 1 and 3.
    const StateVector psi = permute_parties(joint, {0, 2, 1, 3});
    if (schmidt_decomposition(psi, Bipartition(4, {0, 1})).rank < 2) continue;
    ++tested;
    const double residual = (psym * psi.amplitudes() - psi.amplitudes()).norm();
    if (residual <= 1e-6) {
      c.expect(false, "seed " + std::to_string(seed - 1) + " residual " + fmt(residual));
    }
  }
  c.expect(tested == 200, "generated fewer than 200 admissible vectors");
}

void criterion_bell_diagonal(Checker& c) {
  const auto certify_bell = [](double p) {
    const DensityOperator sigma =
        apply_extension(bell_diag(p), {copy_isometry(2, 1), copy_isometry(2, 2)});
    const auto p0 = group_projector(sigma.layout(), {0}, SubspaceKind::Symmetric);
    const auto p12 = group_projector(sigma.layout(), {1, 2}, SubspaceKind::Symmetric);
    return certify_gme_bipartite(sigma, Bipartition(3, {0}), p0, p12);
  };
  const Certificate at_half = certify_bell(0.5);
  c.expect(at_half.verdict == Verdict::Inconclusive, "p=0.5 expected Inconclusive");
  c.expect(at_half.cut_evidence.front().min_pt_eigenvalue >= -1e-10,
           "p=0.5 min PT " + fmt(at_half.cut_evidence.front().min_pt_eigenvalue));
  c.expect(certify_bell(0.7).verdict == Verdict::GmeCertified,
           "p=0.7 expected GME-certified");
}

void criterion_pure_checker(Checker& c) {
  c.expect(pure_gme_check(ghz_state(2, 4)), "GHZ(2,4)");
  c.expect(pure_gme_check(dicke_state(4, 2)), "D(4,2)");
  c.expect(!pure_gme_check(tensor_compose(max_entangled(2), max_entangled(2))),
           "phi+ (x) phi+");
  c.expect(!pure_gme_check(StateVector(qubits(4), Vector::Unit(16, 0))), "|0000>");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StateVector psi = random_state_vector(qubits(4), 9000 + seed);
    bool oracle = true;
    for (const auto& cut : enumerate_bipartitions(4)) {
      if (test::oracle_schmidt_rank(psi, cut.side()) < 2) {
        oracle = false;
        break;
      }
    }
    if (pure_gme_check(psi) != oracle) {
      c.expect(false, "oracle disagreement at seed " + std::to_string(seed));
    }
  }
}

void criterion_window_scan(Checker& c) {
  for (int d = 2; d <= 8; ++d) {
    WindowParams params;
    params.d = d;
    params.theta = 0.5;  // supremum over admissible Schmidt weights
    const ThresholdReport report =
        classification_window(Family::SchmidtWhitenoiseExtension, params);
    c.expect(report.windows.front().empty,
             "whitenoise window unexpectedly nonempty at d=" + std::to_string(d));
  }
  WindowParams marginal;
  marginal.d = 3;
  marginal.mu = (RealVector(3) << 0.49, 0.49, 0.02).finished();
  const ThresholdReport report =
      classification_window(Family::SchmidtMarginalExtension, marginal);
  const Window& w = report.windows.front();
  c.expect(!w.empty, "marginal window expected nonempty");
  c.expect(std::abs(w.upper - 8.0 / 27.0) <= 1e-12, "marginal ceiling");
  c.expect(w.lower < w.upper, "marginal edges ordered");
  // The bisection must resolve the onset to 1e-6; for this family the exact
  // onset is 1/(d+1) = 0.25.
  c.expect(std::abs(w.lower - 0.25) <= 2e-6, "marginal onset " + fmt(w.lower));
}

struct CliEnv {
  fs::path cli;
  fs::path golden;
  fs::path scratch;
};

int run_cli(const CliEnv& env, const std::string& args) {
  const std::string cmd = "cd '" + env.scratch.string() + "' && '" +
                          env.cli.string() + "' " + args + " >>cli_log.txt 2>&1";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_cli_golden(Checker& c, const CliEnv& env) {
  const auto t0 = std::chrono::steady_clock::now();
  c.expect(run_cli(env, "build isotropic --d 2 --p 0.4 --out seed.json") == 0, "build");
  c.expect(run_cli(env, "extend --in seed.json --maps copy:2:2,copy:2:2 "
                        "--out ext.json") == 0,
           "extend");
  c.expect(run_cli(env, "certify --in ext.json --partition '0,1|2,3' "
                        "--kinds 'sym|sym' --seed 0 --out report.json") == 0,
           "certify");
  c.expect(run_cli(env, "thresholds --d 2..8 --out thresholds.json") == 0,
           "thresholds");
  c.expect(run_cli(env, "thresholds --family schmidt-whitenoise-extension "
                        "--d 2..8 --out wn.json") == 0,
           "whitenoise scan");
  c.expect(run_cli(env, "build isotropic --d 2 --p 1.5 --out bad.json") == 2,
           "range error exit code");
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0).count();
  c.expect(elapsed < 10.0, "CLI suite took " + fmt(elapsed) + " s (budget 10 s)");

  const std::string produced = slurp(env.scratch / "report.json");
  const std::string golden = slurp(env.golden);
  c.expect(!golden.empty(), "golden file missing or empty");
  c.expect(produced == golden, "report does not match the committed golden file");
}

}  // namespace

int main(int argc, char** argv) {
  CliEnv env;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    // The CLI runs from a scratch directory, so anchor both paths here.
    if (flag == "--cli") env.cli = fs::absolute(argv[i + 1]);
    if (flag == "--golden") env.golden = fs::absolute(argv[i + 1]);
  }
  env.scratch = fs::temp_directory_path() /
                ("gmeforge-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(env.scratch);

  struct Criterion {
    std::string name;
    double budget_s;  // 0 = untimed
    std::function<void(Checker&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"dicke-identity", 1.0, criterion_dicke_identity},
      {"closed-form-vs-pipeline", 2.0, criterion_closed_form_vs_pipeline},
      {"pt-spectrum-transfer", 0.0, criterion_pt_transfer},
      {"isotropic-boundary", 0.0, criterion_isotropic_boundary},
      {"threshold-table", 0.0, criterion_threshold_table},
      {"gme-window", 0.0, criterion_gme_window},
      {"ges-suite", 0.0, criterion_ges_suite},
      {"symmetric-support-violation", 0.0, criterion_symmetric_support_violation},
      {"bell-diagonal-family", 0.0, criterion_bell_diagonal},
      {"pure-state-checker", 0.0, criterion_pure_checker},
      {"classification-window-scan", 0.0, criterion_window_scan},
      {"cli-golden-file", 0.0,
       [&env](Checker& c) { criterion_cli_golden(c, env); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Checker checker;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - t0).count();
    if (criteria[i].budget_s > 0.0 && elapsed >= criteria[i].budget_s) {
      checker.expect(false, "runtime " + fmt(elapsed) + " s exceeds budget " +
                                fmt(criteria[i].budget_s) + " s");
    }
    const bool ok = checker.failures.empty();
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1 < 10 ? " " : "") << (i + 1)
              << " " << criteria[i].name << " (" << fmt(elapsed) << " s)";
    if (!ok) {
      std::cout << " -- " << checker.failures.front();
      if (checker.failures.size() > 1) {
        std::cout << " (+" << checker.failures.size() - 1 << " more)";
      }
    }
    std::cout << "\n";
  }
  fs::remove_all(env.scratch);
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criterion(s) failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
