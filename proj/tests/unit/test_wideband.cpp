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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bosonic_mac/errors.hpp"
#include "bosonic_mac/wideband.hpp"

using namespace bmac;

namespace {

constexpr double kPi = std::numbers::pi;

/// Composite Simpson rule on [a, b]; an oracle independent of the library quadrature.
template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    }
    return s * h / 3.0;
}

}  // namespace

TEST(WidebandRegion, ClosedForms) {
    EXPECT_NEAR(homodyne_wideband_region(WidebandModel({1.0}, {kPi})).bound(1), 1.0, 1e-15);
    EXPECT_NEAR(homodyne_wideband_region(WidebandModel::two_user(0.5, 2 * kPi, 2 * kPi)).bound(3), std::sqrt(2.0),
                1e-14);
    EXPECT_NEAR(optimal_wideband_region(WidebandModel({1.0}, {3.0 / kPi})).bound(1), 1.0, 1e-15);
    const RateRegion zero = homodyne_wideband_region(WidebandModel::two_user(0.3, 0.0, 0.0));
    for (double b : zero.bounds()) {
        EXPECT_EQ(b, 0.0);
    }
}

TEST(WidebandRegion, OptimalOverHomodyneIsPiOverRoot3) {
    const WidebandModel w = WidebandModel::two_user(0.3, 2.0, 5.0);
    const RateRegion h = homodyne_wideband_region(w);
    const RateRegion o = optimal_wideband_region(w);
    for (Subset s = 1; s <= 3; ++s) {
        EXPECT_NEAR(o.bound(s) / h.bound(s), kPi / std::sqrt(3.0), 1e-14);
    }
}

TEST(WidebandRegion, ScalesAsSquareRootOfPower) {
    const WidebandModel w = WidebandModel::two_user(0.4, 1.5, 2.5);
    const WidebandModel w2 = WidebandModel::two_user(0.4, 3.0, 5.0);
    for (Detection d : {Detection::homodyne, Detection::optimal}) {
        for (Subset s = 1; s <= 3; ++s) {
            EXPECT_NEAR(wideband_region(w2, d).bound(s), std::sqrt(2.0) * wideband_region(w, d).bound(s), 1e-14);
        }
    }
}

TEST(Waterfill, HomodyneCutoffShapeAndPower) {
    const WidebandModel w({1.0}, {kPi});
    const SpectralAllocation a = waterfill_homodyne(w, 1);
    EXPECT_NEAR(a.cutoff(), 4.0 * kPi, 1e-14);
    EXPECT_NEAR(a(1.0), kPi - 0.25, 1e-14);
    EXPECT_EQ(a(4.0 * kPi + 1e-9), 0.0);
    // Start just above 0: the integrand tends to sqrt(pi P), not 0, as w -> 0.
    const double p = simpson([&](double om) { return om * a(om) / (2 * kPi); }, 1e-12, a.cutoff(), 20000);
    EXPECT_NEAR(p, kPi, 1e-9 * kPi);
    EXPECT_NEAR(a.power(), kPi, 1e-9 * kPi);
    EXPECT_NEAR(rate_integral(a, Detection::homodyne), 1.0, 1e-9);
}

TEST(Waterfill, CombinedUsesTotalReceivedPower) {
    const WidebandModel w = WidebandModel::two_user(0.5, 2 * kPi, 4 * kPi);
    const SpectralAllocation a = waterfill_homodyne(w, 3);
    EXPECT_NEAR(a.cutoff(), 4.0 * std::sqrt(kPi * 3 * kPi), 1e-12);
    EXPECT_TRUE(waterfill_homodyne(WidebandModel::two_user(0.5, 0.0, 1.0), 1).is_empty());
}

TEST(Waterfill, Nonincreasing) {
    for (Detection d : {Detection::homodyne, Detection::heterodyne, Detection::optimal}) {
        const SpectralAllocation a = wideband_allocation(WidebandModel({1.0}, {2.0}), 1, d);
        double prev = INFINITY;
        for (const auto &[om, n] : a.sample(500)) {
            EXPECT_LE(n, prev);
            EXPECT_GE(n, 0.0);
            prev = n;
        }
    }
}

TEST(OptimalAllocation, PowerNormalization) {
    const WidebandModel w({1.0}, {2.0});
    const SpectralAllocation a = optimal_allocation(w, 1);
    // int w / (e^{c w} - 1) dw = pi^2 / (6 c^2)
    const double c = std::sqrt(kPi / (12.0 * 2.0));
    EXPECT_NEAR(kPi * kPi / (6 * c * c) / (2 * kPi), 2.0, 1e-12);
    EXPECT_NEAR(a.power(), 2.0, 1e-6 * 2.0);
    EXPECT_NEAR(rate_integral(a, Detection::optimal), optimal_wideband_region(w).bound(1), 1e-6);
    const SpectralAllocation b = optimal_allocation(WidebandModel({1.0}, {4.0}), 1);
    EXPECT_GT(b(1.0), a(1.0));
}

TEST(Heterodyne, SameRegionAsHomodyne) {
    const WidebandModel w({1.0}, {3.0});
    const SpectralAllocation a = wideband_allocation(w, 1, Detection::heterodyne);
    EXPECT_NEAR(a.power(), 3.0, 1e-9 * 3.0);
    EXPECT_NEAR(rate_integral(a, Detection::heterodyne), homodyne_wideband_region(w).bound(1), 1e-9);
}

TEST(Corner, EqualPowersExample) {
    const CornerAllocations c = corner_allocations(WidebandModel::two_user(0.5, kPi, kPi));
    EXPECT_NEAR(c.closed_form[0], std::sqrt(0.5), 1e-14);
    EXPECT_NEAR(c.closed_form[1], 1.0 - std::sqrt(0.5), 1e-14);
    EXPECT_NEAR(c.achieved[0], c.closed_form[0], 1e-6);
    EXPECT_NEAR(c.achieved[1], c.closed_form[1], 1e-6);
    EXPECT_EQ(c.nonnegativity_violations, 0);
    EXPECT_NEAR(c.alice.power(), kPi, 1e-9 * kPi);
    EXPECT_NEAR(c.bob.power(), kPi, 1e-6 * kPi);
}

TEST(Corner, LiesOnBoundaryForBothFamilies) {
    for (Detection d : {Detection::homodyne, Detection::optimal}) {
        const WidebandModel w = WidebandModel::two_user(0.3, 2.0, 5.0);
        const CornerAllocations c = corner_allocations(w, d);
        const RateRegion r = wideband_region(w, d);
        EXPECT_NEAR(c.achieved[0], r.bound(1), 1e-6);
        EXPECT_NEAR(c.achieved[0] + c.achieved[1], r.bound(3), 1e-6);
        EXPECT_EQ(c.nonnegativity_violations, 0);
    }
}

TEST(Corner, ZeroBobPowerAndDegenerateEta) {
    const CornerAllocations c = corner_allocations(WidebandModel::two_user(0.5, kPi, 0.0));
    EXPECT_NEAR(c.achieved[0], std::sqrt(0.5), 1e-6);
    EXPECT_NEAR(c.achieved[1], 0.0, 1e-9);
    const CornerAllocations one = corner_allocations(WidebandModel::two_user(1.0, kPi, kPi));
    EXPECT_TRUE(one.single_user_fallback);
    EXPECT_NEAR(one.achieved[0], 1.0, 1e-9);
}

TEST(Discretized, HomodyneConvergesAndMatchesAllocation) {
    const WidebandModel w({1.0}, {kPi});
    const double wmax = 4 * kPi;
    const DiscretizedWaterfill d = discretized_waterfill(w, 1, 1e-3 * wmax, Detection::homodyne);
    EXPECT_NEAR(d.rate, 1.0, 0.01);
    EXPECT_LT(d.budget_residual, 1e-9);
    for (const auto &[om, n] : d.allocation.bins()) {
        if (om > 0.05 * wmax && om < 0.95 * wmax) {
            EXPECT_NEAR(n, kPi / om - 0.25, 1e-3) << om;
        }
    }
}

TEST(Discretized, OptimalAndHeterodyneVariants) {
    const WidebandModel w({1.0}, {kPi});
    const double wmax = 4 * kPi;
    const DiscretizedWaterfill o = discretized_waterfill(w, 1, 1e-3 * wmax, Detection::optimal);
    EXPECT_NEAR(o.rate, kPi / std::sqrt(3.0), 0.01 * kPi / std::sqrt(3.0));
    const DiscretizedWaterfill h = discretized_waterfill(w, 1, 1e-3 * wmax, Detection::heterodyne);
    EXPECT_NEAR(h.rate, 1.0, 0.01);
}

TEST(Discretized, RejectsBadBinWidth) {
    EXPECT_THROW(discretized_waterfill(WidebandModel({1.0}, {1.0}), 1, 0.0, Detection::homodyne), DomainError);
}

TEST(Units, SiHbarScalesRates) {
    const WidebandModel w({1.0}, {1e-3}, kHbarSI);
    EXPECT_NEAR(homodyne_wideband_region(w).bound(1), std::sqrt(1e-3 / (kPi * kHbarSI)), 1e-3);
}
