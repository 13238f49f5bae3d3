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

#ifndef BOSONIC_MAC_COHERENT_MAC_HPP
#define BOSONIC_MAC_COHERENT_MAC_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "bosonic_mac/rate_region.hpp"

namespace bmac {

enum class Detection { homodyne, heterodyne, optimal };

std::string_view detection_name(Detection d);
Detection parse_detection(std::string_view name);

/// Single-mode coherent-state MAC: user i couples into the received mode with
/// transmissivity eta_i (summing to one) under a mean photon budget nbar_i.
class MacModel {
   public:
    MacModel(std::vector<double> transmissivities, std::vector<double> photon_budgets);
    /// Two users with transmissivities (eta, 1 - eta).
    static MacModel two_user(double eta, double nbar_a, double nbar_b);

    int num_users() const {
        return static_cast<int>(etas_.size());
    }
    const std::vector<double> &transmissivities() const {
        return etas_;
    }
    const std::vector<double> &photon_budgets() const {
        return nbars_;
    }
    /// Mean received photon number contributed by the users in `s`: sum eta_i nbar_i.
    double received_photons(Subset s) const;

   private:
    std::vector<double> etas_;
    std::vector<double> nbars_;
};

/// Two-user model with additive classical complex Gaussian noise of mean photon number N.
struct NoisyMacModel {
    NoisyMacModel(MacModel base, double noise_photons);

    MacModel base;
    double noise_photons;
};

/// Sum of received photons for a two-user channel, eta nA + (1 - eta) nB. Shared by the
/// coherent-state optimal sum bound and the super-receiver outer bound, so the two are
/// the same expression.
double two_user_received_photons(double eta, double nbar_a, double nbar_b);

/// bound(S) = 1/2 ln(1 + 4 sum_S eta_i nbar_i).
RateRegion homodyne_region(const MacModel &m);
/// bound(S) = ln(1 + sum_S eta_i nbar_i).
RateRegion heterodyne_region(const MacModel &m);
/// bound(S) = g(sum_S eta_i nbar_i). More than two users requires `allow_extension`;
/// such regions are annotated as an m-user extension of the two-user result.
RateRegion optimal_region(const MacModel &m, bool allow_extension = false);
/// bound(S) = g(sum_S eta_i nbar_i + N) - g(N).
RateRegion noisy_optimal_region(const NoisyMacModel &nm);

RateRegion region_for(const MacModel &m, Detection d, bool allow_extension = false);

/// Plug-in Gaussian mutual-information estimates from a simulated classical-equivalent channel.
struct QuadratureEstimate {
    int num_users = 0;
    /// estimates[mask - 1] estimates I(X_S ; Y | X_{S^c}) in nats.
    std::vector<double> estimates;
    std::int64_t samples = 0;
    /// Set when samples < kMinQuadratureSamples; estimates are still returned.
    bool low_sample_warning = false;

    double estimate(Subset s) const {
        return estimates.at(s - 1);
    }
};

inline constexpr std::int64_t kMinQuadratureSamples = 10000;

/// Draws Gaussian inputs at the photon budgets, adds the detector's quadrature noise
/// (1/4 for homodyne, 1/2 per quadrature for heterodyne) and estimates every subset's
/// conditional mutual information from sample covariances. Deterministic per seed.
QuadratureEstimate simulate_quadrature(const MacModel &m, Detection detection, std::int64_t samples,
                                       std::uint64_t seed);

}  // namespace bmac

#endif
