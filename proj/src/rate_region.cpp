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

#include "bosonic_mac/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bosonic_mac/errors.hpp"

namespace bmac {

namespace {

std::string subset_label(Subset s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i : members(s)) {
        out << (first ? "" : ",") << i;
        first = false;
    }
    out << '}';
    return out.str();
}

void check_user_count(int num_users) {
    if (num_users < 1 || num_users > kMaxUsers) {
        throw DomainError("number of users must be in [1, " + std::to_string(kMaxUsers) + "], got " +
                          std::to_string(num_users));
    }
}

void require_two_users(const RateRegion &region, const char *op) {
    if (region.num_users() != 2) {
        throw DomainError(std::string(op) + " requires a two-user region, got " +
                          std::to_string(region.num_users()) + " users");
    }
}

struct Pt {
    double x, y;
};

}  // namespace

std::vector<int> members(Subset s) {
    std::vector<int> out;
    for (int i = 0; s != 0; ++i, s >>= 1) {
        if (s & 1u) {
            out.push_back(i + 1);
        }
    }
    return out;
}

RatePoint::RatePoint(std::vector<double> rates) : rates_(std::move(rates)) {
    for (double r : rates_) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw DomainError("rates must be finite and nonnegative");
        }
    }
}

double RatePoint::sum_over(Subset s) const {
    double total = 0.0;
    for (int i : members(s)) {
        total += rates_.at(static_cast<std::size_t>(i - 1));
    }
    return total;
}

RateRegion::RateRegion(int num_users, std::vector<double> bounds, Unit unit, std::string annotation)
    : num_users_(num_users), bounds_(std::move(bounds)), unit_(unit), annotation_(std::move(annotation)) {
    check_user_count(num_users);
    if (bounds_.size() != full_set(num_users)) {
        throw DomainError("expected " + std::to_string(full_set(num_users)) + " subset bounds, got " +
                          std::to_string(bounds_.size()));
    }
    for (Subset s = 1; s <= full_set(num_users); ++s) {
        double b = bounds_[s - 1];
        if (!std::isfinite(b) || b < 0.0) {
            throw DomainError("bound for subset " + subset_label(s) + " must be finite and nonnegative");
        }
    }
    // Checking single-element extensions suffices: monotonicity is transitive.
    for (Subset s = 1; s <= full_set(num_users); ++s) {
        for (int i = 0; i < num_users; ++i) {
            Subset t = s | (Subset{1} << i);
            if (t == s) {
                continue;
            }
            if (bounds_[s - 1] > bounds_[t - 1] + kContainsTolerance) {
                throw DomainError("nonmonotone bounds: bound" + subset_label(s) + " = " +
                                  std::to_string(bounds_[s - 1]) + " exceeds bound" + subset_label(t) + " = " +
                                  std::to_string(bounds_[t - 1]));
            }
        }
    }
}

double RateRegion::bound(Subset s) const {
    if (s == 0 || s > full_set(num_users_)) {
        throw DomainError("subset mask out of range for a " + std::to_string(num_users_) + "-user region");
    }
    return bounds_[s - 1];
}

RateRegion RateRegion::in(Unit unit) const {
    if (unit == unit_) {
        return *this;
    }
    std::vector<double> converted = bounds_;
    for (double &b : converted) {
        b = unit == Unit::bits ? b * kBitsPerNat : b / kBitsPerNat;
    }
    return {num_users_, std::move(converted), unit, annotation_};
}

double RateRegion::min_slack(const RatePoint &p) const {
    if (p.size() != static_cast<std::size_t>(num_users_)) {
        throw DomainError("rate point has " + std::to_string(p.size()) + " entries, region has " +
                          std::to_string(num_users_) + " users");
    }
    double slack = std::numeric_limits<double>::infinity();
    for (Subset s = 1; s <= full_set(num_users_); ++s) {
        slack = std::min(slack, bounds_[s - 1] - p.sum_over(s));
    }
    return slack;
}

bool RateRegion::contains(const RatePoint &p, double tolerance) const {
    return min_slack(p) >= -tolerance;
}

RateRegion subset_region(int num_users, const std::function<double(Subset)> &bound_fn, Unit unit) {
    check_user_count(num_users);
    std::vector<double> bounds(full_set(num_users));
    for (Subset s = 1; s <= full_set(num_users); ++s) {
        bounds[s - 1] = bound_fn(s);
    }
    return {num_users, std::move(bounds), unit};
}

RateRegion tightened_subset_region(int num_users, const std::function<double(Subset)> &bound_fn, Unit unit) {
    check_user_count(num_users);
    const Subset full = full_set(num_users);
    std::vector<double> bounds(full);
    for (Subset s = 1; s <= full; ++s) {
        bounds[s - 1] = bound_fn(s);
    }
    // Descending mask order visits every superset before its subsets.
    for (Subset s = full; s >= 1; --s) {
        for (int i = 0; i < num_users; ++i) {
            Subset t = s | (Subset{1} << i);
            if (t != s) {
                bounds[s - 1] = std::min(bounds[s - 1], bounds[t - 1]);
            }
        }
    }
    return {num_users, std::move(bounds), unit};
}

std::vector<RatePoint> two_user_vertices(const RateRegion &region) {
    require_two_users(region, "two_user_vertices");
    const double b1 = region.bound(0b01);
    const double b2 = region.bound(0b10);
    const double b12 = region.bound(0b11);

    std::vector<Pt> raw;
    if (b12 >= b1 + b2) {
        raw = {{0, 0}, {b1, 0}, {b1, b2}, {0, b2}};
    } else {
        raw = {{0, 0}, {b1, 0}, {b1, b12 - b1}, {b12 - b2, b2}, {0, b2}};
    }
    std::vector<RatePoint> out;
    auto same = [](const Pt &p, const RatePoint &q) {
        return std::abs(p.x - q[0]) <= kContainsTolerance && std::abs(p.y - q[1]) <= kContainsTolerance;
    };
    for (const Pt &p : raw) {
        if (!out.empty() && same(p, out.back())) {
            continue;
        }
        out.emplace_back(std::max(0.0, p.x), std::max(0.0, p.y));
    }
    while (out.size() > 1 && same({out.back()[0], out.back()[1]}, out.front())) {
        out.pop_back();
    }
    return out;
}

double area(const RateRegion &region) {
    std::vector<RatePoint> v = two_user_vertices(region);
    double twice = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const RatePoint &p = v[i];
        const RatePoint &q = v[(i + 1) % v.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::abs(twice);
}

std::vector<RatePoint> boundary_trace(const RateRegion &region, int samples) {
    require_two_users(region, "boundary_trace");
    if (samples < 2) {
        throw DomainError("boundary_trace needs at least 2 samples");
    }
    const double b1 = region.bound(0b01);
    const double b2 = region.bound(0b10);
    const double b12 = region.bound(0b11);

    std::vector<Pt> path;
    if (b12 >= b1 + b2) {
        path = {{0, b2}, {b1, b2}, {b1, 0}};
    } else {
        path = {{0, b2}, {b12 - b2, b2}, {b1, b12 - b1}, {b1, 0}};
    }
    std::vector<double> cumulative{0.0};
    for (std::size_t i = 1; i < path.size(); ++i) {
        cumulative.push_back(cumulative.back() +
                             std::hypot(path[i].x - path[i - 1].x, path[i].y - path[i - 1].y));
    }
    const double total = cumulative.back();

    std::vector<RatePoint> out;
    out.reserve(static_cast<std::size_t>(samples));
    std::size_t seg = 1;
    for (int k = 0; k < samples; ++k) {
        if (k == samples - 1) {
            out.emplace_back(std::max(0.0, path.back().x), std::max(0.0, path.back().y));
            break;
        }
        const double s = total * static_cast<double>(k) / static_cast<double>(samples - 1);
        while (seg + 1 < path.size() && cumulative[seg] < s) {
            ++seg;
        }
        const double len = cumulative[seg] - cumulative[seg - 1];
        const double t = len > 0.0 ? std::clamp((s - cumulative[seg - 1]) / len, 0.0, 1.0) : 0.0;
        const Pt &a = path[seg - 1];
        const Pt &b = path[seg];
        out.emplace_back(std::max(0.0, a.x + t * (b.x - a.x)), std::max(0.0, a.y + t * (b.y - a.y)));
    }
    return out;
}

}  // namespace bmac
