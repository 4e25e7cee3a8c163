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

#include <string>
#include <variant>

#include "gmeforge/hilbert.hpp"
#include "gmeforge/io.hpp"
#include "gmeforge/statezoo.hpp"

using namespace gmeforge;

TEST_CASE("format_double is value-exact") {
  for (double x : {0.0, 0.5, 1.0 / 3.0, 5.0 / 12.0, -0.4999999999999999,
                   1.2345678901234567e-11}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("state files round-trip byte-identically") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const StateVector psi = random_state_vector(PartyLayout({2, 3, 2}), seed);
    const std::string once = render_state_file(psi, {"checked"}, "prov");
    const LoadedState loaded = parse_state_file(once);
    REQUIRE(std::holds_alternative<StateVector>(loaded));
    const std::string twice =
        render_state_file(std::get<StateVector>(loaded), {"checked"}, "prov");
    CHECK(once == twice);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityOperator rho =
        random_density_operator(PartyLayout({2, 2, 2}), 50 + seed)
            .with_tag("round-trip");
    const std::string once = render_state_file(rho, "prov");
    const LoadedState loaded = parse_state_file(once);
    REQUIRE(std::holds_alternative<DensityOperator>(loaded));
    const std::string twice =
        render_state_file(std::get<DensityOperator>(loaded), "prov");
    CHECK(once == twice);
    CHECK(std::get<DensityOperator>(loaded).has_tag("round-trip"));
  }
}

TEST_CASE("loaded values are identical, not just close") {
  const DensityOperator rho = isotropic(3, 0.4);
  const LoadedState loaded = parse_state_file(render_state_file(rho, ""));
  const DensityOperator& back = std::get<DensityOperator>(loaded);
  CHECK((back.matrix() - rho.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("malformed state files raise ArgumentError") {
  CHECK_THROWS_AS(parse_state_file("not json"), ArgumentError);
  CHECK_THROWS_AS(parse_state_file("{}"), ArgumentError);
  CHECK_THROWS_AS(
      parse_state_file(R"({"format_version":"1","kind":"pure","dims":[2],"data":[[1,0],[0,0],[0,0]]})"),
      ArgumentError);
  CHECK_THROWS_AS(
      parse_state_file(R"({"format_version":"9","kind":"pure","dims":[2],"data":[[1,0],[0,0]]})"),
      ArgumentError);
  CHECK_THROWS_AS(
      parse_state_file(R"({"format_version":"1","kind":"mixed","dims":[2],"data":[[1,0],[0,0]]})"),
      ArgumentError);
}

TEST_CASE("report renderers are deterministic") {
  Certificate cert;
  cert.verdict = Verdict::GmeCertified;
  cert.support_residual = 1.25e-13;
  cert.basis_kinds = {SubspaceKind::Symmetric, SubspaceKind::Symmetric};
  cert.cut_evidence.push_back(CutEvidence{Bipartition(4, {0, 1}), -0.125});
  cert.notes.push_back("note");
  const PartitionSpec partition(4, {{0, 1}, {2, 3}});
  const std::string a =
      render_certificate_report(cert, partition, {"t1", "t2"}, "cmd", 7);
  const std::string b =
      render_certificate_report(cert, partition, {"t1", "t2"}, "cmd", 7);
  CHECK(a == b);
  CHECK(a.find("\"verdict\": \"GME-certified\"") != std::string::npos);
  CHECK(a.find("\"seed\": 7") != std::string::npos);

  ThresholdReport row;
  row.d = 2;
  row.p_sep = 1.0 / 3.0;
  row.p_gm = 5.0 / 12.0;
  row.p_gm_tilde = 5.0 / 19.0;
  row.theta = 0.5;
  row.windows.push_back(Window{"gme-and-bilocal", 1.0 / 3.0, 5.0 / 12.0, false, true,
                               false});
  const std::string r1 = render_threshold_report({row}, "isotropic-extension", "cmd");
  const std::string r2 = render_threshold_report({row}, "isotropic-extension", "cmd");
  CHECK(r1 == r2);
  CHECK(r1.find("\"empty\": false") != std::string::npos);
}
