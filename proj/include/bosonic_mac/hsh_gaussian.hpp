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

#ifndef BOSONIC_MAC_HSH_GAUSSIAN_HPP
#define BOSONIC_MAC_HSH_GAUSSIAN_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "bosonic_mac/core_math.hpp"
#include "bosonic_mac/rate_region.hpp"

namespace bmac {

/// Two-user MAC whose received mode is a zero-mean Gaussian state with covariance V,
/// displaced by classical messages alpha, beta with <|alpha|^2> = N_A, <|beta|^2> = N_B.
struct HshChannel {
    HshChannel(CovMatrix v, double n_a, double n_b);

    CovMatrix v;
    double n_a;
    double n_b;
};

/// Maximum Holevo rate for a modulation budget, and which closed-form branch produced it.
/// Branch 1: budget >= anisotropy of V (the modulation can whiten V). Branch 2 otherwise.
struct RmaxResult {
    Entropy value;
    int branch;
};

RmaxResult rmax_individual(const CovMatrix &v, double budget);
/// Identical to rmax_individual(v, n_a + n_b): the sum-rate maximum depends on the total budget only.
RmaxResult rmax_sum(const CovMatrix &v, double n_a, double n_b);
/// Evaluates one closed-form branch regardless of which is active (for continuity checks).
double rmax_branch_value(const CovMatrix &v, double budget, int branch);

RateRegion hsh_region(const HshChannel &ch);

/// Holevo rate S(V + modulation) - S(V) of a Gaussian-modulated Gaussian state.
double modulation_rate(const CovMatrix &v, const CovMatrix &modulation);

/// Polar parameterization of a modulation covariance with trace `budget`:
/// [[r cos t + N/2, r sin t], [r sin t, -r cos t + N/2]], 0 <= r <= N/2.
struct InputCovChoice {
    InputCovChoice(double r, double theta, double budget);

    double r;
    double theta;
    double budget;

    CovMatrix covariance() const;
};

/// Polar coordinates (r_V, theta_V) of the point ((V2 - V1)/2, -V12); theta_V in [0, 2 pi),
/// and theta_V = 0 when r_V = 0.
struct PolarPoint {
    double r;
    double theta;
};
PolarPoint target_point(const CovMatrix &v);

enum class HshCase { I, II, III, IV };
std::string_view case_label(HshCase c);

enum class Corner { lower, upper };

struct CornerInputs {
    InputCovChoice a;
    InputCovChoice b;
    HshCase hsh_case;
    /// The case list assumes N_B > N_A; otherwise it was applied with the users exchanged.
    bool roles_swapped;
    /// Case IV lists the same inputs for both corners.
    bool same_inputs_for_both_corners;
};

/// Inputs that simultaneously achieve the corner's individual maximum and the sum maximum.
CornerInputs corner_inputs(const HshChannel &ch, Corner corner);
HshCase classify(const HshChannel &ch);

enum class RmaxTarget { r1, r2, sum };

struct BruteForceResult {
    Entropy value;
    /// Maximizing modulation in polar coordinates (for the sum: the combined modulation).
    double r;
    double theta;
    std::int64_t evaluations;
};

/// Grid search of max det(V + V_alpha) over the polar parameterization (grid x grid points),
/// followed by local zoom refinement around the best cell. The sum target searches the
/// combined modulation disk of radius (N_A + N_B)/2.
BruteForceResult brute_force_rmax(const HshChannel &ch, RmaxTarget which, int grid);

/// Sparse four-dimensional grid over (r_A, theta_A, r_B, theta_B) for the sum rate, refined
/// by coordinate zooming. Independent of the structural identity used by brute_force_rmax.
BruteForceResult brute_force_rmax_sum_4d(const HshChannel &ch, int grid);

/// Two users sending displaced zero-mean Gaussian states with covariances V_A, V_B
/// through a beam splitter of transmissivity eta.
struct GaussianMacInput {
    GaussianMacInput(double eta, CovMatrix v_a, CovMatrix v_b, double nbar_a, double nbar_b);

    double eta;
    CovMatrix v_a;
    CovMatrix v_b;
    double nbar_a;
    double nbar_b;
};

/// V = eta V_A + (1-eta) V_B, N_A = eta (nbar_A - V1^A - V2^A + 1/2), N_B likewise.
/// Throws FeasibilityError naming the user whose state alone exceeds the budget.
HshChannel gaussian_mac_to_hsh(const GaussianMacInput &in);

struct GaussianMacRegion {
    RateRegion region;
    HshChannel channel;
    /// Branch used by R_max1, R_max2, R_max12.
    std::array<int, 3> branches;
    /// True when all three maxima use branch 1, i.e. the large-budget closed forms are active.
    bool large_budget_forms_active;
};

GaussianMacRegion gaussian_mac_region(const GaussianMacInput &in);

enum class SearchObjective { area, r1, r2, weighted };
std::string_view objective_name(SearchObjective o);
SearchObjective parse_objective(std::string_view name);

struct CovarianceSearchOptions {
    SearchObjective objective = SearchObjective::area;
    /// Weight w on R1 for the weighted objective max_vertices w R1 + (1-w) R2.
    double weight = 0.5;
    /// Coarse grid points per search dimension.
    int grid = 12;
    /// Random restarts of the local refinement, drawn from `seed`.
    int restarts = 8;
    std::uint64_t seed = 0;
    /// Pure inputs (det = 1/16) only; otherwise a per-user thermal occupation is also searched.
    bool pure_only = true;
};

struct SearchStep {
    std::vector<double> params;
    double objective;
};

struct CovarianceSearchResult {
    CovMatrix v_a;
    CovMatrix v_b;
    RateRegion region;
    double objective;
    /// Best-so-far history; params are (r_A, theta_A, r_B, theta_B[, t_A, t_B]).
    std::vector<SearchStep> trace;
    std::int64_t evaluations;
};

double objective_value(const RateRegion &region, SearchObjective objective, double weight);

/// Searches squeezed (optionally thermal) input covariances maximizing the objective of the
/// resulting Gaussian MAC region. The vacuum (coherent-state) point is always evaluated.
CovarianceSearchResult covariance_search(double eta, double nbar_a, double nbar_b,
                                         const CovarianceSearchOptions &options = {});

}  // namespace bmac

#endif
