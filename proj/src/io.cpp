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

#include "bosonic_mac/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "bosonic_mac/errors.hpp"

namespace bmac {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string region_json(const RateRegion &region, Unit unit, bool with_vertices) {
    if (region.unit() != Unit::nats) {
        throw DomainError("region_json expects a region in nats");
    }
    nlohmann::ordered_json j;
    j["unit"] = unit_name(unit);
    j["num_users"] = region.num_users();
    auto constraints = nlohmann::ordered_json::array();
    for (Subset s = 1; s <= full_set(region.num_users()); ++s) {
        constraints.push_back({{"subset", members(s)}, {"bound", in_unit(region.bound(s), unit)}});
    }
    j["constraints"] = constraints;
    if (with_vertices && region.num_users() == 2) {
        auto vertices = nlohmann::ordered_json::array();
        for (const RatePoint &p : two_user_vertices(region)) {
            vertices.push_back({in_unit(p[0], unit), in_unit(p[1], unit)});
        }
        j["vertices"] = vertices;
    }
    if (!region.annotation().empty()) {
        j["annotation"] = region.annotation();
    }
    return j.dump();
}

std::string pairs_csv(const std::string &header, const std::vector<std::pair<double, double>> &rows) {
    std::string out = header + "\n";
    for (const auto &[a, b] : rows) {
        out += format_number(a) + "," + format_number(b) + "\n";
    }
    return out;
}

std::string trace_csv(const std::vector<RatePoint> &trace, Unit unit) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(trace.size());
    for (const RatePoint &p : trace) {
        rows.emplace_back(in_unit(p[0], unit), in_unit(p[1], unit));
    }
    return pairs_csv("R1,R2", rows);
}

void write_text(const std::filesystem::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << content) || !f.flush()) {
        throw DomainError("cannot write " + path.string());
    }
}

}  // namespace bmac
