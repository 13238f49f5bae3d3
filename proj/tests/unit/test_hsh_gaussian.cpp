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
#include <random>

#include "bosonic_mac/coherent_mac.hpp"
#include "bosonic_mac/errors.hpp"
#include "bosonic_mac/hsh_gaussian.hpp"
#include "oracles.hpp"

using namespace bmac;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CovMatrix random_state(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double scale = 1.0 + 2.0 * u(rng);
    return scale * squeeze_covariance(SqueezeParams::from_polar(1.5 * u(rng), kTwoPi * u(rng)));
}

/// Entropy gain of the best modulation with trace `budget`, found by the test-side polar grid.
double oracle_rmax(const CovMatrix &v, double budget) {
    auto det_at = [&](double x, double y) {
        const double a = v.v1() + budget / 2 + x;
        const double b = v.v2() + budget / 2 - x;
        const double c = v.v12() + y;
        return a * b - c * c;
    };
    const double best = oracle::polar_grid_max(det_at, budget / 2, 200);
    return oracle::gaussian_entropy_symplectic(std::sqrt(best), std::sqrt(best), 0.0) -
           oracle::gaussian_entropy_symplectic(v.v1(), v.v2(), v.v12());
}

double entropy_gain(const CovMatrix &v, const CovMatrix &mod) {
    return modulation_rate(v, mod);
}

}  // namespace

TEST(Rmax, VacuumReducesToG) {
    for (double n : {0.0, 0.3, 1.0, 7.5}) {
        EXPECT_NEAR(rmax_individual(CovMatrix::vacuum(), n).value.nats(), g(n).nats(), 1e-14);
    }
}

TEST(Rmax, PaperMatrixBranches) {
    const CovMatrix v(1.0 / 32.0, 2.0);
    EXPECT_NEAR(v.anisotropy(), 63.0 / 32.0, 1e-15);
    const RmaxResult one = rmax_individual(v, 1.0);
    EXPECT_EQ(one.branch, 2);
    EXPECT_NEAR(one.value.nats(), oracle_rmax(v, 1.0), 1e-6);
    const RmaxResult sum = rmax_sum(v, 1.0, 1.0);
    EXPECT_EQ(sum.branch, 1);
    EXPECT_NEAR(sum.value.nats(), oracle_rmax(v, 2.0), 1e-6);
    EXPECT_EQ(rmax_individual(v, 0.0).value.nats(), 0.0);
}

TEST(Rmax, SumDependsOnTotalOnly) {
    const CovMatrix v(0.1, 1.2, 0.2);
    EXPECT_EQ(rmax_sum(v, 0.7, 0.4).value.nats(), rmax_sum(v, 1.1, 0.0).value.nats());
    EXPECT_EQ(rmax_sum(v, 0.7, 0.4).value.nats(), rmax_individual(v, 1.1).value.nats());
}

TEST(Rmax, MatchesPolarOracleOnRandomChannels) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        const CovMatrix v = random_state(rng);
        const double n = 4.0 * u(rng);
        EXPECT_NEAR(rmax_individual(v, n).value.nats(), oracle_rmax(v, n), 1e-6) << i;
    }
}

TEST(Rmax, BranchContinuity) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const CovMatrix v = random_state(rng);
        const double n = v.anisotropy();
        EXPECT_NEAR(rmax_branch_value(v, n, 1), rmax_branch_value(v, n, 2), 1e-9);
    }
}

TEST(Rmax, RejectsUnphysical) {
    EXPECT_THROW(rmax_individual(CovMatrix(0.1, 0.1), 1.0), UnphysicalStateError);
    EXPECT_THROW(HshChannel(CovMatrix::vacuum(), -1.0, 1.0), DomainError);
}

TEST(HshRegion, VacuumAndMonotonicity) {
    const RateRegion r = hsh_region(HshChannel(CovMatrix::vacuum(), 2.0, 3.0));
    EXPECT_NEAR(r.bound(1), g(2.0).nats(), 1e-14);
    EXPECT_NEAR(r.bound(3), g(5.0).nats(), 1e-14);
    const CovMatrix v(0.05, 1.5, 0.1);
    double prev[3] = {0, 0, 0};
    for (double na = 0.0; na < 4.0; na += 0.05) {
        const RateRegion rr = hsh_region(HshChannel(v, na, 1.0));
        for (Subset s = 1; s <= 3; ++s) {
            EXPECT_GE(rr.bound(s), prev[s - 1] - 1e-14);
            prev[s - 1] = rr.bound(s);
        }
    }
}

TEST(BruteForce, VacuumAndAngle) {
    const HshChannel vac(CovMatrix::vacuum(), 1.5, 2.0);
    EXPECT_NEAR(brute_force_rmax(vac, RmaxTarget::r1, 100).value.nats(), g(1.5).nats(), 1e-9);
    // Branch 2 active: the maximizing modulation points along theta_V.
    const HshChannel ch(CovMatrix(1.0 / 32.0, 2.0), 1.0, 1.0);
    const BruteForceResult bf = brute_force_rmax(ch, RmaxTarget::r1, 100);
    EXPECT_NEAR(bf.r, 0.5, 1e-6);
    EXPECT_NEAR(bf.theta, target_point(ch.v).theta, 1e-6);
    EXPECT_NEAR(bf.value.nats(), rmax_individual(ch.v, 1.0).value.nats(), 1e-9);
}

TEST(BruteForce, FourDimensionalSumAgrees) {
    const HshChannel ch(CovMatrix(1.0 / 32.0, 2.0), 1.0, 1.0);
    const BruteForceResult bf = brute_force_rmax_sum_4d(ch, 12);
    EXPECT_NEAR(bf.value.nats(), rmax_sum(ch.v, 1.0, 1.0).value.nats(), 1e-6);
}

TEST(TargetPoint, Conventions) {
    const PolarPoint iso = target_point(CovMatrix::thermal(1.0));
    EXPECT_EQ(iso.r, 0.0);
    EXPECT_EQ(iso.theta, 0.0);
    const PolarPoint p = target_point(CovMatrix(1.0, 0.5, 0.1));
    EXPECT_GE(p.theta, 0.0);
    EXPECT_LT(p.theta, kTwoPi);
    EXPECT_NEAR(p.r, std::hypot(-0.25, 0.1), 1e-15);
}

TEST(Corners, PaperCaseIIExample) {
    // r_V = 0.6 via V2 - V1 = 1.2.
    const HshChannel ch(CovMatrix(0.25, 1.45), 1.0, 1.5);
    EXPECT_EQ(classify(ch), HshCase::II);
    const CornerInputs c = corner_inputs(ch, Corner::lower);
    EXPECT_NEAR(c.a.r, 0.5, 1e-15);
    EXPECT_NEAR(c.b.r, 0.1, 1e-14);
    EXPECT_EQ(c.a.theta, target_point(ch.v).theta);
    EXPECT_EQ(c.b.theta, target_point(ch.v).theta);
    EXPECT_FALSE(c.roles_swapped);
}

TEST(Corners, IsotropicIsCaseIWithZeroRadii) {
    const HshChannel ch(CovMatrix::thermal(0.5), 1.0, 2.0);
    EXPECT_EQ(classify(ch), HshCase::I);
    for (Corner k : {Corner::lower, Corner::upper}) {
        const CornerInputs c = corner_inputs(ch, k);
        EXPECT_EQ(c.a.r, 0.0);
        EXPECT_EQ(c.b.r, 0.0);
    }
}

TEST(Corners, CaseIVSameInputsFlagged) {
    const HshChannel ch(CovMatrix(1.0 / 32.0, 2.0), 0.5, 1.0);
    EXPECT_EQ(classify(ch), HshCase::IV);
    const CornerInputs lo = corner_inputs(ch, Corner::lower);
    const CornerInputs up = corner_inputs(ch, Corner::upper);
    EXPECT_TRUE(lo.same_inputs_for_both_corners);
    EXPECT_EQ(lo.a.r, up.a.r);
    EXPECT_EQ(lo.b.r, up.b.r);
    EXPECT_NEAR(lo.a.r, 0.25, 1e-15);
    EXPECT_NEAR(lo.b.r, 0.5, 1e-15);
}

TEST(Corners, AchieveMaximaInEveryCaseAndBothOrders) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int seen[4] = {0, 0, 0, 0};
    for (int i = 0; i < 2000; ++i) {
        const CovMatrix v = random_state(rng);
        const double na = 3.0 * u(rng);
        const double nb = 3.0 * u(rng);
        const HshChannel ch(v, na, nb);
        ++seen[static_cast<int>(classify(ch))];
        for (Corner k : {Corner::lower, Corner::upper}) {
            const CornerInputs c = corner_inputs(ch, k);
            const CovMatrix va = c.a.covariance();
            const CovMatrix vb = c.b.covariance();
            EXPECT_NEAR(va.trace(), na, 1e-15 * std::max(1.0, na));
            EXPECT_NEAR(vb.trace(), nb, 1e-15 * std::max(1.0, nb));
            EXPECT_GE(va.det(), -1e-15);
            EXPECT_GE(vb.det(), -1e-15);
            const double sum = rmax_sum(v, na, nb).value.nats();
            EXPECT_NEAR(entropy_gain(v, va + vb), sum, 1e-9);
            if (k == Corner::lower) {
                EXPECT_NEAR(entropy_gain(v, va), rmax_individual(v, na).value.nats(), 1e-9);
            } else {
                EXPECT_NEAR(entropy_gain(v, vb), rmax_individual(v, nb).value.nats(), 1e-9);
            }
        }
    }
    for (int c = 0; c < 4; ++c) {
        EXPECT_GT(seen[c], 10) << "case " << c;
    }
}

TEST(InputCov, Validation) {
    EXPECT_THROW(InputCovChoice(0.6, 0.0, 1.0), DomainError);
    EXPECT_THROW(InputCovChoice(-0.1, 0.0, 1.0), DomainError);
    const CovMatrix m = InputCovChoice(0.5, 1.0, 1.0).covariance();
    EXPECT_NEAR(m.det(), 0.0, 1e-15);
}

TEST(GaussianMac, CoherentSpecialCase) {
    const GaussianMacInput in(0.5, CovMatrix::vacuum(), CovMatrix::vacuum(), 10.0, 8.0);
    const HshChannel ch = gaussian_mac_to_hsh(in);
    EXPECT_DOUBLE_EQ(ch.n_a, 5.0);
    EXPECT_DOUBLE_EQ(ch.n_b, 4.0);
    const RateRegion r = gaussian_mac_region(in).region;
    const RateRegion o = optimal_region(MacModel::two_user(0.5, 10.0, 8.0));
    for (Subset s = 1; s <= 3; ++s) {
        EXPECT_NEAR(r.bound(s), o.bound(s), 1e-12);
    }
}

TEST(GaussianMac, PaperExampleMatrices) {
    const CovMatrix v(1.0 / 32.0, 2.0);
    const GaussianMacInput in(0.5, v, v, 10.0, 8.0);
    const HshChannel ch = gaussian_mac_to_hsh(in);
    EXPECT_DOUBLE_EQ(ch.n_a, (10.0 - 65.0 / 32.0 + 0.5) / 2.0);
    EXPECT_DOUBLE_EQ(ch.n_b, (8.0 - 65.0 / 32.0 + 0.5) / 2.0);
    const GaussianMacRegion g4 = gaussian_mac_region(in);
    EXPECT_TRUE(g4.large_budget_forms_active);
    EXPECT_NEAR(g4.region.bound(1), oracle::bose_einstein_entropy_sum(5.0 + 0.5 * 49.0 / 32.0), 1e-9);
    EXPECT_NEAR(g4.region.bound(1), 2.834015, 1e-6);
    EXPECT_GT(g4.region.bound(1), g(5.0).nats());
    // Pure mapped state: the sum bound is the coherent one.
    EXPECT_NEAR(g4.region.bound(3), g(9.0).nats(), 1e-12);
}

TEST(GaussianMac, FeasibilityErrorNamesUser) {
    const CovMatrix hot = CovMatrix::thermal(5.0);
    try {
        gaussian_mac_to_hsh(GaussianMacInput(0.5, CovMatrix::vacuum(), hot, 10.0, 2.0));
        FAIL();
    } catch (const FeasibilityError &e) {
        EXPECT_NE(std::string(e.what()).find("user B"), std::string::npos);
    }
}

TEST(Search, BeatsPaperExampleForR1AndIsDeterministic) {
    CovarianceSearchOptions opt;
    opt.objective = SearchObjective::r1;
    opt.grid = 8;
    opt.restarts = 4;
    const CovarianceSearchResult a = covariance_search(0.5, 10.0, 8.0, opt);
    EXPECT_GE(a.objective, 2.834014956861 - 1e-9);
    const CovarianceSearchResult b = covariance_search(0.5, 10.0, 8.0, opt);
    EXPECT_EQ(a.objective, b.objective);
    EXPECT_EQ(a.trace.size(), b.trace.size());
    // The trace is a best-so-far history.
    for (std::size_t i = 1; i < a.trace.size(); ++i) {
        EXPECT_GT(a.trace[i].objective, a.trace[i - 1].objective);
    }
}

TEST(Search, NeverBelowCoherentArea) {
    CovarianceSearchOptions opt;
    opt.grid = 6;
    opt.restarts = 2;
    const CovarianceSearchResult r = covariance_search(0.5, 10.0, 8.0, opt);
    EXPECT_GE(r.objective, area(optimal_region(MacModel::two_user(0.5, 10.0, 8.0))) - 1e-12);
}

TEST(Search, EtaOneIgnoresBob) {
    CovarianceSearchOptions opt;
    opt.objective = SearchObjective::r1;
    opt.grid = 6;
    opt.restarts = 1;
    const CovarianceSearchResult r = covariance_search(1.0, 3.0, 2.0, opt);
    for (double rb : {0.0, 0.5, 1.0}) {
        const CovMatrix vb = squeeze_covariance(SqueezeParams::from_polar(rb, 0.3));
        const GaussianMacRegion g1 = gaussian_mac_region(GaussianMacInput(1.0, r.v_a, vb, 3.0, 2.0));
        EXPECT_NEAR(g1.region.bound(1), r.region.bound(1), 1e-12);
    }
}

TEST(Search, ObjectiveParsing) {
    EXPECT_EQ(parse_objective("weighted"), SearchObjective::weighted);
    EXPECT_THROW(parse_objective("volume"), DomainError);
    const RateRegion r(2, {2.0, 1.0, 2.5});
    EXPECT_DOUBLE_EQ(objective_value(r, SearchObjective::weighted, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(objective_value(r, SearchObjective::weighted, 0.5), 1.25);
}
