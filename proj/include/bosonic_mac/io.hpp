// Copyright 2026 The bosonic_mac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BOSONIC_MAC_IO_HPP
#define BOSONIC_MAC_IO_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "bosonic_mac/rate_region.hpp"

namespace bmac {

inline constexpr int kSchemaVersion = 1;

/// Shortest round-trip decimal form of a double ("%.17g").
std::string format_number(double x);

/// Region as a JSON object {"unit", "num_users", "constraints": [{"subset": [1-based users], "bound"}],
/// "vertices"? (two users), "annotation"?}, serialized compactly. Vertices are derived in the
/// region's own unit and every number is converted once on output, so a bits rendering is the
/// nats rendering times exactly log2(e).
std::string region_json(const RateRegion &region, Unit unit, bool with_vertices = true);

/// CSV with the header line and one row per pair, all values "%.17g".
std::string pairs_csv(const std::string &header, const std::vector<std::pair<double, double>> &rows);
std::string trace_csv(const std::vector<RatePoint> &trace, Unit unit);

/// Writes content to path, creating parent directories. Throws DomainError on failure.
void write_text(const std::filesystem::path &path, const std::string &content);

}  // namespace bmac

#endif
