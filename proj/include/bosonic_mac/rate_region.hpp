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

#ifndef BOSONIC_MAC_RATE_REGION_HPP
#define BOSONIC_MAC_RATE_REGION_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bosonic_mac/core_math.hpp"

namespace bmac {

/// Nonempty subset of users {1..m}, encoded as a bitmask (bit i-1 set for user i).
using Subset = std::uint32_t;

inline constexpr int kMaxUsers = 20;
/// Absolute tolerance for "lies on a boundary" checks.
inline constexpr double kBoundaryTolerance = 1e-9;
/// Absolute tolerance used by RateRegion::contains.
inline constexpr double kContainsTolerance = 1e-12;

constexpr Subset full_set(int num_users) {
    return (Subset{1} << num_users) - 1;
}
constexpr Subset singleton(int user) {
    return Subset{1} << (user - 1);
}
/// 1-based member indices of `s`, ascending.
std::vector<int> members(Subset s);

/// A componentwise nonnegative rate tuple.
class RatePoint {
   public:
    explicit RatePoint(std::vector<double> rates);
    RatePoint(double r1, double r2) : RatePoint(std::vector<double>{r1, r2}) {
    }

    const std::vector<double> &rates() const {
        return rates_;
    }
    std::size_t size() const {
        return rates_.size();
    }
    double operator[](std::size_t i) const {
        return rates_[i];
    }
    double sum_over(Subset s) const;

    friend bool operator==(const RatePoint &, const RatePoint &) = default;

   private:
    std::vector<double> rates_;
};

/// Multiple-access rate region {R >= 0 : sum_{i in S} R_i <= bound(S) for all nonempty S}.
///
/// Stored as the subset-bound map; vertices and geometry are derived on demand.
/// Immutable after construction.
class RateRegion {
   public:
    /// `bounds[mask - 1]` is the bound for subset `mask`; must hold 2^m - 1 entries.
    /// Validates finiteness, nonnegativity and monotonicity (S subset of T implies
    /// bound(S) <= bound(T), up to kContainsTolerance).
    RateRegion(int num_users, std::vector<double> bounds, Unit unit = Unit::nats, std::string annotation = {});

    int num_users() const {
        return num_users_;
    }
    Unit unit() const {
        return unit_;
    }
    /// Free-form provenance note carried into serialized output (empty for most regions).
    const std::string &annotation() const {
        return annotation_;
    }
    double bound(Subset s) const;
    const std::vector<double> &bounds() const {
        return bounds_;
    }

    /// Same region expressed in `unit`.
    RateRegion in(Unit unit) const;

    bool contains(const RatePoint &p, double tolerance = kContainsTolerance) const;
    /// Smallest slack bound(S) - sum_S(p) over all subsets.
    double min_slack(const RatePoint &p) const;

   private:
    int num_users_;
    std::vector<double> bounds_;
    Unit unit_;
    std::string annotation_;
};

/// Builds a region by enumerating all 2^m - 1 subsets. Throws DomainError on a
/// monotonicity violation, naming the offending pair.
RateRegion subset_region(int num_users, const std::function<double(Subset)> &bound_fn, Unit unit = Unit::nats);

/// Same as subset_region, but first replaces each bound(S) by min over supersets T of bound(T).
/// The described set of nonnegative rate tuples is unchanged; this admits raw bound
/// families (such as the super-receiver outer bound) whose individual bounds exceed the sum bound.
RateRegion tightened_subset_region(int num_users, const std::function<double(Subset)> &bound_fn,
                                   Unit unit = Unit::nats);

/// Pentagon vertices (0,0), (b1,0), (b1, b12-b1), (b12-b2, b2), (0,b2) in
/// counterclockwise order, with coincident vertices collapsed.
std::vector<RatePoint> two_user_vertices(const RateRegion &region);

/// Shoelace area of the two-user vertex polygon.
double area(const RateRegion &region);

/// Points along the upper-right boundary from (0, b2) to (b1, 0), uniformly spaced by arc length.
std::vector<RatePoint> boundary_trace(const RateRegion &region, int samples);

}  // namespace bmac

#endif
