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

#include "bosonic_mac/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bosonic_mac/coherent_mac.hpp"
#include "bosonic_mac/errors.hpp"

namespace bmac {

namespace {

void check(double eta, double nbar_a, double nbar_b) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("transmissivity must lie in [0, 1]");
    }
    if (!(nbar_a >= 0.0) || !(nbar_b >= 0.0) || !std::isfinite(nbar_a) || !std::isfinite(nbar_b)) {
        throw DomainError("photon budgets must be finite and nonnegative");
    }
}

}  // namespace

OuterBoundReport outer_bounds(double eta, double nbar_a, double nbar_b) {
    check(eta, nbar_a, nbar_b);
    // Same received-photon expression as the coherent-state optimal region's sum bound.
    return {g(nbar_a), g(nbar_b), g(two_user_received_photons(eta, nbar_a, nbar_b))};
}

RateRegion outer_bound_region(double eta, double nbar_a, double nbar_b) {
    const OuterBoundReport r = outer_bounds(eta, nbar_a, nbar_b);
    const double b[3] = {r.r1_outer.nats(), r.r2_outer.nats(), r.sum_outer.nats()};
    return tightened_subset_region(2, [&](Subset s) { return b[s - 1]; });
}

Entropy squeezed_homodyne_rate(double eta, double nbar_a, double nbar_b, double z) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw DomainError("transmissivity must lie in (0, 1]");
    }
    check(eta, nbar_a, nbar_b);
    if (!(z >= 0.0)) {
        throw DomainError("squeeze parameter must be nonnegative");
    }
    const double s = std::sinh(z);
    const double spent = s * s;
    if (spent > nbar_a * (1.0 + 1e-12)) {
        throw DomainError("squeezing costs " + std::to_string(spent) + " photons, exceeding the budget " +
                          std::to_string(nbar_a));
    }
    const double signal = std::max(0.0, nbar_a - spent);
    double noise = std::exp(-2.0 * z);
    if (eta < 1.0) {
        const double big_z = std::asinh(std::sqrt(nbar_b));
        noise += (1.0 - eta) * std::exp(-2.0 * big_z) / eta;
    }
    return Entropy(0.5 * std::log1p(4.0 * signal / noise));
}

double optimal_squeeze(double nbar_a) {
    if (!(nbar_a >= 0.0)) {
        throw DomainError("photon budget must be nonnegative");
    }
    return 0.5 * std::log1p(2.0 * nbar_a);
}

std::vector<RatioRow> asymptotic_ratio(double eta, const std::vector<double> &nbar_grid) {
    std::vector<RatioRow> rows;
    double prev = -1.0;
    for (double n : nbar_grid) {
        if (!(n > prev)) {
            throw DomainError("photon-number grid must be increasing");
        }
        prev = n;
        const double z = optimal_squeeze(n);
        const double rate = squeezed_homodyne_rate(eta, n, n, z).nats();
        const double outer = g(n).nats();
        rows.push_back({n, z, rate, outer, outer > 0.0 ? rate / outer : 0.0});
    }
    return rows;
}

}  // namespace bmac
