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

#ifndef BOSONIC_MAC_BOUNDS_HPP
#define BOSONIC_MAC_BOUNDS_HPP

#include <string>
#include <vector>

#include "bosonic_mac/core_math.hpp"
#include "bosonic_mac/rate_region.hpp"

namespace bmac {

/// Outer bounds on the two-user MAC capacity region. The three values are independent:
/// the sum bound need not be at most r1 + r2 in any tight sense.
struct OuterBoundReport {
    Entropy r1_outer;
    Entropy r2_outer;
    Entropy sum_outer;
    std::string sum_achieved_by = "coherent-state encoding, optimum reception";
};

/// r1 <= g(nbar_A), r2 <= g(nbar_B), r1 + r2 <= g(eta nbar_A + (1-eta) nbar_B).
OuterBoundReport outer_bounds(double eta, double nbar_a, double nbar_b);

/// The outer bounds as a region. Individual bounds above the sum bound are tightened to it,
/// since the raw triple need not be monotone.
RateRegion outer_bound_region(double eta, double nbar_a, double nbar_b);

/// Homodyne rate for Alice using squeeze z while Bob squeezes with his whole budget:
/// 1/2 ln(1 + 4 (nbar_A - sinh^2 z) / (e^{-2z} + (1-eta) e^{-2Z} / eta)), Z = asinh(sqrt(nbar_B)).
/// At eta = 1 the Bob term is absent.
Entropy squeezed_homodyne_rate(double eta, double nbar_a, double nbar_b, double z);

/// ln(2 nbar + 1) / 2.
double optimal_squeeze(double nbar_a);

struct RatioRow {
    double nbar;
    double z;
    double rate;
    double outer;
    double ratio;
};

/// rate / g(nbar) at the optimal squeeze with nbar_B = nbar_A = nbar for each grid value.
std::vector<RatioRow> asymptotic_ratio(double eta, const std::vector<double> &nbar_grid);

}  // namespace bmac

#endif
