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
#include <random>

#include "bosonic_mac/bounds.hpp"
#include "bosonic_mac/coherent_mac.hpp"
#include "bosonic_mac/errors.hpp"
#include "bosonic_mac/hsh_gaussian.hpp"
#include "oracles.hpp"

using namespace bmac;

TEST(Outer, FigureFourValues) {
    const OuterBoundReport r = outer_bounds(0.5, 10.0, 8.0);
    EXPECT_NEAR(r.r1_outer.nats(), oracle::bose_einstein_entropy_sum(10.0), 1e-9);
    EXPECT_NEAR(r.r2_outer.nats(), oracle::bose_einstein_entropy_sum(8.0), 1e-9);
    EXPECT_NEAR(r.sum_outer.nats(), oracle::bose_einstein_entropy_sum(9.0), 1e-9);
    EXPECT_EQ(r.sum_achieved_by, "coherent-state encoding, optimum reception");
    const OuterBoundReport z = outer_bounds(0.5, 0.0, 0.0);
    EXPECT_EQ(z.r1_outer.nats() + z.r2_outer.nats() + z.sum_outer.nats(), 0.0);
}

TEST(Outer, SumEqualsCoherentOptimalExactly) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 300; ++i) {
        const double eta = u(rng);
        const double a = 30 * u(rng);
        const double b = 30 * u(rng);
        EXPECT_EQ(outer_bounds(eta, a, b).sum_outer.nats(), optimal_region(MacModel::two_user(eta, a, b)).bound(3));
    }
}

TEST(Outer, RegionTightensIndividualBounds) {
    const RateRegion r = outer_bound_region(0.9, 1.0, 50.0);
    EXPECT_LE(r.bound(2), r.bound(3));
    EXPECT_EQ(r.bound(3), outer_bounds(0.9, 1.0, 50.0).sum_outer.nats());
}

TEST(Outer, ContainsEveryInnerRegion) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double eta = 0.02 + 0.96 * u(rng);
        const double a = 20 * u(rng);
        const double b = 20 * u(rng);
        const MacModel m = MacModel::two_user(eta, a, b);
        const RateRegion outer = outer_bound_region(eta, a, b);
        for (Detection d : {Detection::homodyne, Detection::heterodyne, Detection::optimal}) {
            const RateRegion inner = region_for(m, d);
            for (const RatePoint &p : two_user_vertices(inner)) {
                EXPECT_TRUE(outer.contains(p, 1e-12)) << i;
            }
        }
        // Pure squeezed inputs within budget.
        const double ra = std::asinh(std::sqrt(a)) * u(rng);
        const double rb = std::asinh(std::sqrt(b)) * u(rng);
        const CovMatrix va = squeeze_covariance(SqueezeParams::from_polar(ra, 6.28 * u(rng)));
        const CovMatrix vb = squeeze_covariance(SqueezeParams::from_polar(rb, 6.28 * u(rng)));
        const GaussianMacInput in(eta, va, vb, a, b);
        for (const RatePoint &p : two_user_vertices(gaussian_mac_region(in).region)) {
            EXPECT_TRUE(outer.contains(p, 1e-12)) << i;
        }
    }
}

TEST(SqueezedHomodyne, Reductions) {
    EXPECT_NEAR(squeezed_homodyne_rate(1.0, 3.0, 5.0, 0.0).nats(), 0.5 * std::log(13.0), 1e-14);
    const double n = 1e5;
    const double z = optimal_squeeze(n);
    EXPECT_NEAR(squeezed_homodyne_rate(1.0, n, n, z).nats() / std::log1p(2 * n), 1.0, 1e-4);
    // Bob irrelevant at eta = 1.
    EXPECT_EQ(squeezed_homodyne_rate(1.0, 4.0, 0.0, 0.3).nats(), squeezed_homodyne_rate(1.0, 4.0, 9.0, 0.3).nats());
}

TEST(SqueezedHomodyne, BudgetValidation) {
    EXPECT_THROW(squeezed_homodyne_rate(0.5, 1.0, 1.0, std::asinh(1.0) + 1e-3), DomainError);
    EXPECT_THROW(squeezed_homodyne_rate(0.5, 1.0, 1.0, -0.1), DomainError);
    EXPECT_THROW(squeezed_homodyne_rate(0.0, 1.0, 1.0, 0.1), DomainError);
    EXPECT_NO_THROW(squeezed_homodyne_rate(0.5, 1.0, 1.0, std::asinh(1.0)));
}

TEST(SqueezedHomodyne, NeverExceedsIndividualOuterBound) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double eta = 0.01 + 0.99 * u(rng);
        const double a = std::pow(10.0, 6 * u(rng) - 2);
        const double b = std::pow(10.0, 6 * u(rng) - 2);
        const double z = std::asinh(std::sqrt(a)) * u(rng);
        EXPECT_LE(squeezed_homodyne_rate(eta, a, b, z).nats(), g(a).nats() + 1e-12);
    }
}

TEST(OptimalSqueeze, ValuesAndGridOracle) {
    EXPECT_EQ(optimal_squeeze(0.0), 0.0);
    const double z4 = optimal_squeeze(4.0);
    EXPECT_NEAR(z4, std::log(9.0) / 2, 1e-15);
    EXPECT_NEAR(std::pow(std::sinh(z4), 2), (9.0 + 1.0 / 9.0 - 2.0) / 4.0, 1e-13);
    // 1-D grid oracle at eta = 1, nbar = 10.
    const double zmax = std::asinh(std::sqrt(10.0));
    const int n = 200000;
    double best = -1.0;
    double best_z = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double z = zmax * i / n;
        const double v = squeezed_homodyne_rate(1.0, 10.0, 10.0, z).nats();
        if (v > best) {
            best = v;
            best_z = z;
        }
    }
    EXPECT_NEAR(optimal_squeeze(10.0), best_z, 2e-3);
}

TEST(AsymptoticRatio, MonotoneAndBelowOne) {
    const std::vector<double> grid{10, 1e2, 1e3, 1e4, 1e5, 1e6};
    const auto rows = asymptotic_ratio(0.5, grid);
    ASSERT_EQ(rows.size(), grid.size());
    EXPECT_LT(rows.front().ratio, 1.0);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GT(rows[i].ratio, rows[i - 1].ratio);
        EXPECT_LT(rows[i].ratio, 1.0);
    }
    // Direct evaluation; the eta = 1 value is 0.97929.
    EXPECT_NEAR(rows.back().ratio, 0.96560, 5e-5);
    EXPECT_NEAR(asymptotic_ratio(1.0, {1e6}).front().ratio, 0.97929, 5e-5);
    EXPECT_THROW(asymptotic_ratio(0.5, {10.0, 5.0}), DomainError);
}
