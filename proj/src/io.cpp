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

#include "gmeforge/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gmeforge {

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + escape_json(s) + "\""; }

std::string string_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += quoted(items[i]);
  }
  out += "]";
  return out;
}

void append_complex_entries(std::ostringstream& os, const Complex* data, Index count) {
  os << "[";
  for (Index i = 0; i < count; ++i) {
    if (i > 0) os << ",";
    os << "\n    [" << format_double(data[i].real()) << ", "
       << format_double(data[i].imag()) << "]";
  }
  os << "\n  ]";
}

std::string dims_array(const PartyLayout& layout) {
  std::string out = "[";
  for (int p = 0; p < layout.num_parties(); ++p) {
    if (p > 0) out += ", ";
    out += std::to_string(layout.dim(p));
  }
  out += "]";
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string render_state_file(const StateVector& psi,
                              const std::vector<std::string>& tags,
                              const std::string& provenance) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": " << quoted(kFormatVersion) << ",\n";
  os << "  \"kind\": \"pure\",\n";
  os << "  \"dims\": " << dims_array(psi.layout()) << ",\n";
  os << "  \"data\": ";
  append_complex_entries(os, psi.amplitudes().data(), psi.dim());
  os << ",\n";
  os << "  \"tags\": " << string_array(tags) << ",\n";
  os << "  \"provenance\": " << quoted(provenance) << "\n";
  os << "}\n";
  return os.str();
}

std::string render_state_file(const DensityOperator& rho, const std::string& provenance) {
  // Row-major matrix entries; Eigen stores column-major, so walk explicitly.
  const Index d = rho.dim();
  std::vector<Complex> row_major;
  row_major.reserve(static_cast<std::size_t>(d * d));
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) row_major.push_back(rho.matrix()(i, j));
  }
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": " << quoted(kFormatVersion) << ",\n";
  os << "  \"kind\": \"density\",\n";
  os << "  \"dims\": " << dims_array(rho.layout()) << ",\n";
  os << "  \"data\": ";
  append_complex_entries(os, row_major.data(), d * d);
  os << ",\n";
  os << "  \"tags\": "
     << string_array({rho.tags().begin(), rho.tags().end()}) << ",\n";
  os << "  \"provenance\": " << quoted(provenance) << "\n";
  os << "}\n";
  return os.str();
}

LoadedState parse_state_file(const std::string& text,
                             std::vector<std::string>* pure_tags) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("state file: invalid JSON: ") + e.what());
  }
  try {
    const std::string version = doc.at("format_version").get<std::string>();
    if (version != kFormatVersion) {
      throw ArgumentError("state file: unsupported format_version '" + version + "'");
    }
    const std::string kind = doc.at("kind").get<std::string>();
    std::vector<int> dims = doc.at("dims").get<std::vector<int>>();
    PartyLayout layout(dims);
    const auto& data = doc.at("data");
    std::vector<std::string> tags;
    if (doc.contains("tags")) tags = doc.at("tags").get<std::vector<std::string>>();
    auto read_entry = [](const nlohmann::json& pair) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ArgumentError("state file: data entries must be [re, im] pairs");
      }
      return Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    };
    if (kind == "pure") {
      if (static_cast<Index>(data.size()) != layout.total_dim()) {
        throw ArgumentError("state file: pure data length does not match dims");
      }
      Vector v(layout.total_dim());
      for (Index i = 0; i < v.size(); ++i) {
        v(i) = read_entry(data.at(static_cast<std::size_t>(i)));
      }
      if (pure_tags != nullptr) *pure_tags = tags;
      return StateVector(std::move(layout), std::move(v));
    }
    if (kind == "density") {
      const Index d = layout.total_dim();
      if (static_cast<Index>(data.size()) != d * d) {
        throw ArgumentError("state file: density data length does not match dims");
      }
      Matrix m(d, d);
      for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
          m(i, j) = read_entry(data.at(static_cast<std::size_t>(i * d + j)));
        }
      }
      return DensityOperator(std::move(layout), std::move(m),
                             std::set<std::string>(tags.begin(), tags.end()));
    }
    throw ArgumentError("state file: kind must be 'pure' or 'density'");
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("state file: malformed document: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw ArgumentError("failed writing '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string render_certificate_report(const Certificate& certificate,
                                      const PartitionSpec& partition,
                                      const std::vector<std::string>& input_tags,
                                      const std::string& command, std::uint64_t seed) {
  std::vector<std::string> kinds;
  for (auto k : certificate.basis_kinds) kinds.push_back(to_string(k));
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": " << quoted(kFormatVersion) << ",\n";
  os << "  \"tool_version\": " << quoted(kToolVersion) << ",\n";
  os << "  \"command\": " << quoted(command) << ",\n";
  os << "  \"seed\": " << seed << ",\n";
  os << "  \"certificate\": {\n";
  os << "    \"verdict\": " << quoted(to_string(certificate.verdict)) << ",\n";
  os << "    \"support_residual\": " << format_double(certificate.support_residual)
     << ",\n";
  os << "    \"partition\": " << quoted(partition.to_string()) << ",\n";
  os << "    \"kinds\": " << string_array(kinds) << ",\n";
  os << "    \"input_tags\": " << string_array(input_tags) << ",\n";
  os << "    \"cut_evidence\": [";
  for (std::size_t i = 0; i < certificate.cut_evidence.size(); ++i) {
    if (i > 0) os << ",";
    os << "\n      {\"cut\": " << quoted(certificate.cut_evidence[i].cut.to_string())
       << ", \"min_pt_eigenvalue\": "
       << format_double(certificate.cut_evidence[i].min_pt_eigenvalue) << "}";
  }
  os << "\n    ],\n";
  os << "    \"notes\": " << string_array(certificate.notes) << "\n";
  os << "  }\n";
  os << "}\n";
  return os.str();
}

std::string render_threshold_report(const std::vector<ThresholdReport>& rows,
                                    const std::string& family_name,
                                    const std::string& command) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format_version\": " << quoted(kFormatVersion) << ",\n";
  os << "  \"tool_version\": " << quoted(kToolVersion) << ",\n";
  os << "  \"command\": " << quoted(command) << ",\n";
  os << "  \"family\": " << quoted(family_name) << ",\n";
  os << "  \"rows\": [";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (r > 0) os << ",";
    os << "\n    {\n";
    os << "      \"d\": " << row.d << ",\n";
    os << "      \"p_sep\": " << format_double(row.p_sep) << ",\n";
    os << "      \"p_gm\": " << format_double(row.p_gm) << ",\n";
    os << "      \"p_gm_tilde\": " << format_double(row.p_gm_tilde) << ",\n";
    os << "      \"theta\": " << format_double(row.theta) << ",\n";
    os << "      \"windows\": [";
    for (std::size_t w = 0; w < row.windows.size(); ++w) {
      const auto& win = row.windows[w];
      if (w > 0) os << ",";
      os << "\n        {\"name\": " << quoted(win.name)
         << ", \"lower\": " << format_double(win.lower)
         << ", \"upper\": " << format_double(win.upper)
         << ", \"lower_inclusive\": " << (win.lower_inclusive ? "true" : "false")
         << ", \"upper_inclusive\": " << (win.upper_inclusive ? "true" : "false")
         << ", \"empty\": " << (win.empty ? "true" : "false") << "}";
    }
    os << "\n      ],\n";
    os << "      \"notes\": " << string_array(row.notes) << "\n";
    os << "    }";
  }
  os << "\n  ]\n";
  os << "}\n";
  return os.str();
}

}  // namespace gmeforge
