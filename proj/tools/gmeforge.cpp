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

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gmeforge/certify.hpp"
#include "gmeforge/extend.hpp"
#include "gmeforge/hilbert.hpp"
#include "gmeforge/io.hpp"
#include "gmeforge/statezoo.hpp"

namespace {

using namespace gmeforge;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitArgument = 2;
constexpr int kExitCapacity = 3;

std::string join_args(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) os << ' ';
    os << argv[i];
  }
  return os.str();
}

RealVector parse_mu(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      values.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw ArgumentError("trailing characters");
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse Schmidt weight '" + item + "'");
    }
  }
  if (values.empty()) throw ArgumentError("empty Schmidt weight list");
  RealVector mu(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) mu(static_cast<Index>(i)) = values[i];
  return mu;
}

std::vector<IsometryMap> parse_map_spec(const std::string& spec) {
  std::vector<IsometryMap> maps;
  std::stringstream ss(spec);
  std::string token;
  auto to_int = [](const std::string& s) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw ArgumentError("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw ArgumentError(std::string("cannot parse integer '") + s + "' in map spec");
    }
  };
  while (std::getline(ss, token, ',')) {
    std::vector<std::string> parts;
    std::stringstream ts(token);
    std::string part;
    while (std::getline(ts, part, ':')) parts.push_back(part);
    if (parts.empty()) throw ArgumentError("empty map token");
    const std::string& name = parts[0];
    if (name == "copy" && parts.size() == 3) {
      maps.push_back(copy_isometry(to_int(parts[1]), to_int(parts[2])));
    } else if (name == "dicke" && (parts.size() == 2 || parts.size() == 3)) {
      bool reversed = false;
      if (parts.size() == 3) {
        if (parts[2] != "rev") throw ArgumentError("dicke map: expected 'rev'");
        reversed = true;
      }
      maps.push_back(dicke_isometry(to_int(parts[1]), reversed));
    } else if (name == "ges" && parts.size() == 2) {
      maps.push_back(ges_isometry(to_int(parts[1])));
    } else if (name == "w" && parts.size() == 2) {
      maps.push_back(w_isometry(to_int(parts[1])));
    } else if (name == "id" && parts.size() == 2) {
      maps.push_back(identity_isometry(to_int(parts[1])));
    } else {
      throw ArgumentError("unrecognized map token '" + token +
                          "' (expected copy:d:L, dicke:d[:rev], ges:n, w:L or id:d)");
    }
  }
  if (maps.empty()) throw ArgumentError("empty map spec");
  return maps;
}

struct BuildOptions {
  std::string family;
  std::string out;
  int d = -1;
  int n = -1;
  int l = -1;
  int k = -1;
  double p = -1.0;
  std::string mu;
};

int require_int(int value, const char* name, const std::string& family) {
  if (value < 0) {
    throw ArgumentError("build " + family + ": missing --" + name);
  }
  return value;
}

double require_p(double value, const std::string& family) {
  if (value < 0.0) throw ArgumentError("build " + family + ": missing --p");
  return value;
}

SchmidtVector require_mu(const std::string& text, const std::string& family) {
  if (text.empty()) throw ArgumentError("build " + family + ": missing --mu");
  return SchmidtVector(parse_mu(text));
}

int run_build(const BuildOptions& opt, const std::string& command) {
  std::optional<StateVector> pure;
  std::optional<DensityOperator> density;
  const std::string& f = opt.family;
  if (f == "isotropic") {
    density = isotropic(require_int(opt.d, "d", f), require_p(opt.p, f));
  } else if (f == "max-entangled") {
    pure = max_entangled(require_int(opt.d, "d", f));
  } else if (f == "ghz") {
    pure = ghz_state(require_int(opt.d, "d", f), require_int(opt.n, "n", f));
  } else if (f == "schmidt-state") {
    pure = schmidt_state(require_mu(opt.mu, f), require_int(opt.n, "n", f));
  } else if (f == "schmidt-noise") {
    density = schmidt_noise_mixture(require_mu(opt.mu, f), require_p(opt.p, f));
  } else if (f == "schmidt-marginal") {
    density = schmidt_marginal_mixture(require_mu(opt.mu, f), require_p(opt.p, f));
  } else if (f == "dicke-source") {
    pure = dicke_source_state(require_int(opt.d, "d", f));
  } else if (f == "bell-diag") {
    density = bell_diag(require_p(opt.p, f));
  } else if (f == "toth-acin") {
    density = toth_acin();
  } else if (f == "w-state") {
    pure = w_state(require_int(opt.k, "k", f));
  } else if (f == "w-complement") {
    pure = w_complement(require_int(opt.k, "k", f));
  } else if (f == "w-mixture") {
    density = w_mixture(require_int(opt.k, "k", f), require_p(opt.p, f));
  } else if (f == "example1") {
    density = example1_state(require_int(opt.d, "d", f), require_int(opt.n, "n", f),
                             require_int(opt.l, "l", f), require_p(opt.p, f));
  } else if (f == "noisy-dicke") {
    density = noisy_dicke(require_int(opt.d, "d", f), require_p(opt.p, f));
  } else if (f == "dicke") {
    pure = dicke_state(require_int(opt.n, "n", f), require_int(opt.k, "k", f));
  } else {
    throw ArgumentError("unknown family '" + f + "'");
  }
  const std::string text = pure.has_value()
                               ? render_state_file(*pure, {}, command)
                               : render_state_file(*density, command);
  write_text_file(opt.out, text);
  return kExitOk;
}

int run_extend(const std::string& in, const std::string& maps_spec,
               const std::string& out, const std::string& command) {
  const auto maps = parse_map_spec(maps_spec);
  std::vector<std::string> pure_tags;
  LoadedState state = parse_state_file(read_text_file(in), &pure_tags);
  if (std::holds_alternative<StateVector>(state)) {
    const StateVector extended = apply_extension(std::get<StateVector>(state), maps);
    std::vector<std::string> tags = pure_tags;
    tags.push_back(induced_partition_tag(induced_partition(maps)));
    write_text_file(out, render_state_file(extended, tags, command));
    return kExitOk;
  }
  DensityOperator extended = apply_extension(std::get<DensityOperator>(state), maps);
  const SteeringTransferResult steering = steering_transfer(extended);
  if (steering.applied) {
    extended = steering.state;
  }
  write_text_file(out, render_state_file(extended, command));
  return kExitOk;
}

int run_certify(const std::string& in, const std::string& partition_spec,
                const std::string& kinds_spec, std::uint64_t seed,
                const std::string& out, const std::string& command) {
  LoadedState state = parse_state_file(read_text_file(in));
  DensityOperator sigma = std::holds_alternative<DensityOperator>(state)
                              ? std::get<DensityOperator>(state)
                              : to_density(std::get<StateVector>(state));
  const PartitionSpec partition =
      PartitionSpec::parse(sigma.layout().num_parties(), partition_spec);
  std::vector<std::string> kind_tokens;
  std::stringstream ss(kinds_spec);
  std::string token;
  while (std::getline(ss, token, '|')) kind_tokens.push_back(token);
  if (static_cast<int>(kind_tokens.size()) != partition.num_groups()) {
    throw ArgumentError("certify: need one kind per partition group");
  }
  std::vector<ProjectorWithKind> projectors;
  for (int g = 0; g < partition.num_groups(); ++g) {
    projectors.push_back(group_projector(
        sigma.layout(), partition.group(g),
        parse_subspace_kind(kind_tokens[static_cast<std::size_t>(g)])));
  }
  const Certificate cert = certify_gme_multipartition(sigma, partition, projectors);
  const std::vector<std::string> input_tags(sigma.tags().begin(), sigma.tags().end());
  const std::string report =
      render_certificate_report(cert, partition, input_tags, command, seed);
  if (!out.empty()) write_text_file(out, report);
  std::cout << "verdict: " << to_string(cert.verdict)
            << " (support residual " << format_double(cert.support_residual) << ")\n";
  return kExitOk;
}

std::pair<int, int> parse_d_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ArgumentError("cannot parse dimension range '" + text + "'");
  }
}

int run_thresholds(const std::string& d_range, const std::string& family_name,
                   const std::string& mu_text, int n, const std::string& out,
                   const std::string& command) {
  std::vector<ThresholdReport> rows;
  if (family_name.empty()) {
    const auto [d_lo, d_hi] = parse_d_range(d_range);
    if (d_lo < 2 || d_hi < d_lo) throw ArgumentError("invalid dimension range");
    std::printf("%4s %14s %14s %14s %14s\n", "d", "p_sep", "p_gm", "p_gm_tilde",
                "theta_dicke");
    for (int d = d_lo; d <= d_hi; ++d) {
      ThresholdReport row;
      row.d = d;
      row.p_sep = 1.0 / (d + 1.0);
      row.p_gm = p_gm(d);
      row.p_gm_tilde = p_gm_tilde(d);
      row.theta = theta_dicke(d);
      std::printf("%4d %14.9f %14.9f %14.9f %14.9f\n", d, row.p_sep, row.p_gm,
                  row.p_gm_tilde, row.theta);
      rows.push_back(std::move(row));
    }
  } else {
    const Family family = parse_family(family_name);
    std::printf("%-30s %4s %14s %14s %10s\n", "family", "d", "window_lower",
                "window_upper", "status");
    auto emit = [&](const ThresholdReport& row) {
      const Window& w = row.windows.front();
      std::printf("%-30s %4d %14.9f %14.9f %10s\n", family_name.c_str(), row.d,
                  w.lower, w.upper, w.empty ? "EMPTY" : "NONEMPTY");
    };
    if (family == Family::GesExtension) {
      if (n < 3) throw ArgumentError("ges-extension: need --n >= 3");
      WindowParams params;
      params.n = n;
      rows.push_back(classification_window(family, params));
      emit(rows.back());
    } else {
      const auto [d_lo, d_hi] = parse_d_range(d_range);
      if (d_lo < 2 || d_hi < d_lo) throw ArgumentError("invalid dimension range");
      for (int d = d_lo; d <= d_hi; ++d) {
        WindowParams params;
        params.d = d;
        if (!mu_text.empty()) {
          params.mu = parse_mu(mu_text);
        } else if (family == Family::SchmidtWhitenoiseExtension) {
          params.theta = 0.5;  // supremum scan
        }
        rows.push_back(classification_window(family, params));
        emit(rows.back());
      }
    }
  }
  if (!out.empty()) {
    write_text_file(out, render_threshold_report(rows, family_name, command));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap_text = std::getenv("GMEFORGE_DIM_CAP")) {
    try {
      std::size_t pos = 0;
      const long long cap = std::stoll(cap_text, &pos);
      if (pos != std::string(cap_text).size() || cap < 2) throw std::invalid_argument("");
      set_dim_cap(cap);
    } catch (const std::exception&) {
      std::cerr << "gmeforge: invalid GMEFORGE_DIM_CAP '" << cap_text << "'\n";
      return kExitArgument;
    }
  }
  const std::string command = join_args(argc, argv);

  CLI::App app{"Constructs multipartite states by local isometric extension and "
               "certifies genuine multipartite entanglement"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  CLI::App* build = app.add_subcommand("build", "Construct a named state family");
  build->add_option("family", build_opt.family, "Family name")->required();
  build->add_option("--d", build_opt.d, "Local dimension");
  build->add_option("--n", build_opt.n, "Party count (family dependent)");
  build->add_option("--l", build_opt.l, "Left group size (example1)");
  build->add_option("--k", build_opt.k, "Qubit count (W families, dicke)");
  build->add_option("--p", build_opt.p, "Mixing parameter");
  build->add_option("--mu", build_opt.mu, "Comma-separated Schmidt weights");
  build->add_option("--out", build_opt.out, "Output state file")->required();

  std::string extend_in, extend_maps, extend_out;
  CLI::App* extend = app.add_subcommand("extend", "Apply local isometries to a state");
  extend->add_option("--in", extend_in, "Input state file")->required();
  extend->add_option("--maps", extend_maps,
                     "Comma list of copy:d:L, dicke:d[:rev], ges:n, w:L, id:d")
      ->required();
  extend->add_option("--out", extend_out, "Output state file")->required();

  std::string certify_in, certify_partition, certify_kinds, certify_out;
  std::uint64_t certify_seed = 0;
  CLI::App* certify = app.add_subcommand("certify", "Certify genuine multipartite "
                                                    "entanglement");
  certify->add_option("--in", certify_in, "Input state file")->required();
  certify->add_option("--partition", certify_partition, "Groups, e.g. 0,1|2,3")
      ->required();
  certify->add_option("--kinds", certify_kinds, "Per-group kinds, e.g. sym|sym")
      ->required();
  certify->add_option("--seed", certify_seed, "Seed recorded in the report");
  certify->add_option("--out", certify_out, "Output report file");

  std::string th_d = "2", th_family, th_mu, th_out;
  int th_n = -1;
  CLI::App* thresholds = app.add_subcommand("thresholds", "Analytic thresholds and "
                                                          "classification windows");
  thresholds->add_option("--d", th_d, "Dimension or range, e.g. 2..8");
  thresholds->add_option("--family", th_family, "Window family");
  thresholds->add_option("--mu", th_mu, "Comma-separated Schmidt weights");
  thresholds->add_option("--n", th_n, "Output qubits per side (ges-extension)");
  thresholds->add_option("--out", th_out, "Output report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "gmeforge: " << e.what() << "\n";
    return kExitArgument;
  }

  try {
    if (build->parsed()) return run_build(build_opt, command);
    if (extend->parsed()) return run_extend(extend_in, extend_maps, extend_out, command);
    if (certify->parsed()) {
      return run_certify(certify_in, certify_partition, certify_kinds, certify_seed,
                         certify_out, command);
    }
    if (thresholds->parsed()) {
      return run_thresholds(th_d, th_family, th_mu, th_n, th_out, command);
    }
  } catch (const CapacityError& e) {
    std::cerr << "gmeforge: capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ArgumentError& e) {
    std::cerr << "gmeforge: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::exception& e) {
    std::cerr << "gmeforge: unexpected failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitArgument;
}
