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

#ifndef BOSONIC_MAC_WIDEBAND_HPP
#define BOSONIC_MAC_WIDEBAND_HPP

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "bosonic_mac/coherent_mac.hpp"
#include "bosonic_mac/rate_region.hpp"

namespace bmac {

inline constexpr double kHbarSI = 1.054571817e-34;

/// Frequency-multiplexed coherent-state MAC with average power budgets P_k.
/// Rates are in nats per second.
class WidebandModel {
   public:
    WidebandModel(std::vector<double> transmissivities, std::vector<double> powers, double hbar = 1.0);
    static WidebandModel two_user(double eta, double power_a, double power_b, double hbar = 1.0);

    int num_users() const {
        return static_cast<int>(etas_.size());
    }
    const std::vector<double> &transmissivities() const {
        return etas_;
    }
    const std::vector<double> &powers() const {
        return powers_;
    }
    double hbar() const {
        return hbar_;
    }
    /// Received power sum_{k in S} eta_k P_k.
    double received_power(Subset s) const;

   private:
    std::vector<double> etas_;
    std::vector<double> powers_;
    double hbar_;
};

/// Mean photon number per mode as a function of radian frequency, zero above `cutoff`.
/// The power integral  int hbar w nbar(w) dw / 2 pi  is evaluated once at construction.
class SpectralAllocation {
   public:
    using Density = std::function<double(double)>;

    /// `cutoff` may be +infinity; the power integral then runs to `ceiling`.
    SpectralAllocation(Density density, double cutoff, double ceiling, double hbar, double budget);
    /// Piecewise-constant allocation over bins [(i) width, (i+1) width) with midpoints `omegas`.
    static SpectralAllocation table(std::vector<double> omegas, std::vector<double> values, double bin_width,
                                    double hbar, double budget);
    static SpectralAllocation empty(double hbar);

    double operator()(double omega) const;
    double cutoff() const {
        return cutoff_;
    }
    /// Upper limit actually used for integrals (cutoff if finite, else the ceiling).
    double upper_limit() const {
        return upper_;
    }
    double power() const {
        return power_;
    }
    double budget() const {
        return budget_;
    }
    double hbar() const {
        return hbar_;
    }
    bool is_empty() const {
        return upper_ == 0.0;
    }
    bool is_table() const {
        return !bins_.empty();
    }
    const std::vector<std::pair<double, double>> &bins() const {
        return bins_;
    }
    double bin_width() const {
        return bin_width_;
    }
    /// Same shape scaled by `factor` (e.g. 1/eta to go from received to transmitted photons).
    SpectralAllocation scaled(double factor) const;
    /// `points` (omega, nbar) pairs on [upper/points, upper], or the table bins.
    std::vector<std::pair<double, double>> sample(int points) const;

   private:
    SpectralAllocation() = default;

    Density density_;
    std::vector<std::pair<double, double>> bins_;
    double bin_width_ = 0.0;
    double cutoff_ = 0.0;
    double upper_ = 0.0;
    double hbar_ = 1.0;
    double budget_ = 0.0;
    double power_ = 0.0;
};

/// sqrt(P / hbar), the natural frequency scale of a power budget.
double characteristic_frequency(double power, double hbar);
/// 50 sqrt(P / hbar); the Bose-Einstein allocation tail beyond it is below 1e-10 of the budget.
double frequency_ceiling(double power, double hbar);

/// bound(S) = sqrt(sum_S eta_k P_k / (pi hbar)). Heterodyne detection gives the same region.
RateRegion homodyne_wideband_region(const WidebandModel &w);
/// bound(S) = sqrt(pi sum_S eta_k P_k / (3 hbar)).
RateRegion optimal_wideband_region(const WidebandModel &w);
RateRegion wideband_region(const WidebandModel &w, Detection d);

/// Received-photon water-filling allocation for the users in `which`:
/// 1/w sqrt(pi P / hbar) - 1/4 below w_max = 4 sqrt(pi P / hbar), with P = sum_{k in which} eta_k P_k.
/// Divide by eta (scaled(1/eta)) for a single user's transmitted allocation.
SpectralAllocation waterfill_homodyne(const WidebandModel &w, Subset which);
/// Received-photon allocation 1 / (exp(sqrt(pi hbar w^2 / 12 P)) - 1), no hard cutoff.
SpectralAllocation optimal_allocation(const WidebandModel &w, Subset which);
SpectralAllocation wideband_allocation(const WidebandModel &w, Subset which, Detection d);

/// Per-mode rate of the chosen detection as a function of received photons.
double mode_rate(double nbar, Detection d);
/// int rate(nbar(w)) dw / 2 pi over the allocation's support.
double rate_integral(const SpectralAllocation &received, Detection d);

struct CornerAllocations {
    /// Transmitted photons per mode for each user.
    SpectralAllocation alice;
    SpectralAllocation bob;
    /// Corner rates obtained by integrating per-mode rates (Bob decoded first, then Alice).
    RatePoint achieved;
    /// (b1, b12 - b1) of the closed-form region.
    RatePoint closed_form;
    /// Grid points where Bob's residual allocation came out negative, and the most negative value.
    int nonnegativity_violations = 0;
    double min_residual = 0.0;
    /// True when eta is 0 or 1 and the corner reduces to a single user.
    bool single_user_fallback = false;
};

/// Allocations achieving the lower-right corner: Alice water-fills alone; Bob takes the
/// residual (nbar'_AB - eta nbar_A) / (1 - eta) of the combined allocation.
CornerAllocations corner_allocations(const WidebandModel &w, Detection family = Detection::homodyne);

struct DiscretizedWaterfill {
    double rate = 0.0;
    /// Received photons per bin.
    SpectralAllocation allocation = SpectralAllocation::empty(1.0);
    double multiplier = 0.0;
    int iterations = 0;
    /// Relative mismatch between spent power and budget.
    double budget_residual = 0.0;
    int bins = 0;
};

/// Maximizes sum_i (Delta/2 pi) rate(nbar_i) subject to sum_i hbar w_i nbar_i Delta / 2 pi <= P over
/// bins centered at w_i = (i - 1/2) Delta up to frequency_ceiling(P). KKT per bin with the
/// multiplier found by bisection. Throws NumericError after 200 bisection steps without convergence.
DiscretizedWaterfill discretized_waterfill(const WidebandModel &w, Subset which, double bin_width, Detection d);

}  // namespace bmac

#endif
