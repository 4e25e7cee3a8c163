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

#include <string>
#include <variant>
#include <vector>

#include "gmeforge/certify.hpp"
#include "gmeforge/core.hpp"

// Versioned JSON persistence.  Files are written by a deterministic
// hand-rolled emitter (fixed key order, doubles printed with 17 significant
// digits) so identical values produce byte-identical files and every double
// round-trips exactly.  Reading uses a standard JSON parser.
namespace gmeforge {

inline constexpr const char* kFormatVersion = "1";
inline constexpr const char* kToolVersion = "0.1.0";

/// Decimal with 17 significant digits (%.17g; value-exact for double).
std::string format_double(double x);

/// State files: kind "pure" (amplitudes) or "density" (row-major matrix),
/// entries as [re, im] pairs.
std::string render_state_file(const StateVector& psi,
                              const std::vector<std::string>& tags,
                              const std::string& provenance);
std::string render_state_file(const DensityOperator& rho, const std::string& provenance);

using LoadedState = std::variant<StateVector, DensityOperator>;

/// Parse a state file; tags on a pure state are returned through *pure_tags
/// when non-null.  Malformed content raises ArgumentError.
LoadedState parse_state_file(const std::string& text,
                             std::vector<std::string>* pure_tags = nullptr);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Certification report.
std::string render_certificate_report(const Certificate& certificate,
                                      const PartitionSpec& partition,
                                      const std::vector<std::string>& input_tags,
                                      const std::string& command, std::uint64_t seed);

/// Threshold/window report rows (one per scanned dimension).
std::string render_threshold_report(const std::vector<ThresholdReport>& rows,
                                    const std::string& family_name,
                                    const std::string& command);

}  // namespace gmeforge
