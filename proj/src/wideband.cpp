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

#include "bosonic_mac/wideband.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bosonic_mac/errors.hpp"

namespace bmac {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double integrate_smooth(const std::function<double(double)> &f, double a, double b) {
    if (!(b > a)) {
        return 0.0;
    }
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

// Rate integrands have an integrable log singularity at w = 0.
double integrate_singular(const std::function<double(double)> &f, double a, double b) {
    if (!(b > a)) {
        return 0.0;
    }
    // Not const: this Boost release declares integrate() non-const.
    thread_local boost::math::quadrature::tanh_sinh<double> integrator;
    auto fn = [&f](double x) { return f(x); };
    return integrator.integrate(fn, a, b, 1e-12);
}

double waterfill_level(double power, double hbar) {
    return std::sqrt(kPi * power / hbar);
}

void require_which(const WidebandModel &w, Subset which) {
    if (which == 0 || which > full_set(w.num_users())) {
        throw DomainError("user subset out of range");
    }
}

}  // namespace

WidebandModel::WidebandModel(std::vector<double> transmissivities, std::vector<double> powers, double hbar)
    : etas_(std::move(transmissivities)), powers_(std::move(powers)), hbar_(hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw DomainError("hbar must be positive");
    }
    // Reuse the single-mode model's validation of transmissivities and budgets.
    MacModel check(etas_, powers_);
    (void)check;
}

WidebandModel WidebandModel::two_user(double eta, double power_a, double power_b, double hbar) {
    return {{eta, 1.0 - eta}, {power_a, power_b}, hbar};
}

double WidebandModel::received_power(Subset s) const {
    double total = 0.0;
    for (int i : members(s)) {
        const auto k = static_cast<std::size_t>(i - 1);
        total += etas_.at(k) * powers_.at(k);
    }
    return total;
}

SpectralAllocation::SpectralAllocation(Density density, double cutoff, double ceiling, double hbar, double budget)
    : density_(std::move(density)), cutoff_(cutoff), hbar_(hbar), budget_(budget) {
    if (!(cutoff >= 0.0)) {
        throw DomainError("allocation cutoff must be nonnegative");
    }
    upper_ = std::isfinite(cutoff) ? cutoff : ceiling;
    if (!std::isfinite(upper_)) {
        throw DomainError("allocation without cutoff needs a finite integration ceiling");
    }
    power_ = hbar_ / (2.0 * kPi) * integrate_smooth([this](double w) { return w * (*this)(w); }, 0.0, upper_);
}

SpectralAllocation SpectralAllocation::table(std::vector<double> omegas, std::vector<double> values,
                                             double bin_width, double hbar, double budget) {
    if (omegas.size() != values.size()) {
        throw DomainError("allocation table columns differ in length");
    }
    SpectralAllocation out;
    out.hbar_ = hbar;
    out.budget_ = budget;
    out.bin_width_ = bin_width;
    double power = 0.0;
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        out.bins_.emplace_back(omegas[i], values[i]);
        power += hbar * omegas[i] * values[i] * bin_width / (2.0 * kPi);
        if (values[i] > 0.0) {
            out.cutoff_ = omegas[i] + bin_width / 2.0;
        }
    }
    out.upper_ = omegas.empty() ? 0.0 : omegas.back() + bin_width / 2.0;
    out.power_ = power;
    return out;
}

SpectralAllocation SpectralAllocation::empty(double hbar) {
    SpectralAllocation out;
    out.hbar_ = hbar;
    return out;
}

double SpectralAllocation::operator()(double omega) const {
    if (!(omega > 0.0) || omega > upper_) {
        return 0.0;
    }
    if (!bins_.empty()) {
        auto i = static_cast<std::size_t>(omega / bin_width_);
        return i < bins_.size() ? bins_[i].second : 0.0;
    }
    if (!density_ || omega > cutoff_) {
        return 0.0;
    }
    return std::max(0.0, density_(omega));
}

SpectralAllocation SpectralAllocation::scaled(double factor) const {
    if (!(factor >= 0.0) || !std::isfinite(factor)) {
        throw DomainError("allocation scale factor must be finite and nonnegative");
    }
    SpectralAllocation out = *this;
    for (auto &bin : out.bins_) {
        bin.second *= factor;
    }
    if (density_) {
        out.density_ = [d = density_, factor](double w) { return factor * d(w); };
    }
    out.power_ *= factor;
    out.budget_ *= factor;
    return out;
}

std::vector<std::pair<double, double>> SpectralAllocation::sample(int points) const {
    if (!bins_.empty()) {
        return bins_;
    }
    std::vector<std::pair<double, double>> out;
    if (is_empty() || points < 1) {
        return out;
    }
    for (int i = 1; i <= points; ++i) {
        const double w = upper_ * static_cast<double>(i) / static_cast<double>(points);
        out.emplace_back(w, (*this)(w));
    }
    return out;
}

double characteristic_frequency(double power, double hbar) {
    return std::sqrt(power / hbar);
}

double frequency_ceiling(double power, double hbar) {
    return 50.0 * characteristic_frequency(power, hbar);
}

RateRegion homodyne_wideband_region(const WidebandModel &w) {
    return subset_region(w.num_users(),
                         [&](Subset s) { return std::sqrt(w.received_power(s) / (kPi * w.hbar())); });
}

RateRegion optimal_wideband_region(const WidebandModel &w) {
    return subset_region(w.num_users(),
                         [&](Subset s) { return std::sqrt(kPi * w.received_power(s) / (3.0 * w.hbar())); });
}

RateRegion wideband_region(const WidebandModel &w, Detection d) {
    return d == Detection::optimal ? optimal_wideband_region(w) : homodyne_wideband_region(w);
}

SpectralAllocation waterfill_homodyne(const WidebandModel &w, Subset which) {
    require_which(w, which);
    const double power = w.received_power(which);
    if (power <= 0.0) {
        return SpectralAllocation::empty(w.hbar());
    }
    const double level = waterfill_level(power, w.hbar());
    return {[level](double omega) { return level / omega - 0.25; }, 4.0 * level, 4.0 * level, w.hbar(), power};
}

SpectralAllocation optimal_allocation(const WidebandModel &w, Subset which) {
    require_which(w, which);
    const double power = w.received_power(which);
    if (power <= 0.0) {
        return SpectralAllocation::empty(w.hbar());
    }
    // 1 / (exp(c w) - 1) with c = sqrt(pi hbar / (12 P)).
    const double c = std::sqrt(kPi * w.hbar() / (12.0 * power));
    return {[c](double omega) { return 1.0 / std::expm1(c * omega); }, kInf, frequency_ceiling(power, w.hbar()),
            w.hbar(), power};
}

SpectralAllocation wideband_allocation(const WidebandModel &w, Subset which, Detection d) {
    switch (d) {
        case Detection::homodyne:
            return waterfill_homodyne(w, which);
        case Detection::optimal:
            return optimal_allocation(w, which);
        case Detection::heterodyne: {
            // 1/(lambda hbar w) - 1 below w_c = sqrt(4 pi P / hbar).
            require_which(w, which);
            const double power = w.received_power(which);
            if (power <= 0.0) {
                return SpectralAllocation::empty(w.hbar());
            }
            const double wc = std::sqrt(4.0 * kPi * power / w.hbar());
            return {[wc](double omega) { return wc / omega - 1.0; }, wc, wc, w.hbar(), power};
        }
    }
    throw DomainError("unknown detection");
}

double mode_rate(double nbar, Detection d) {
    switch (d) {
        case Detection::homodyne:
            return 0.5 * std::log1p(4.0 * nbar);
        case Detection::heterodyne:
            return std::log1p(nbar);
        case Detection::optimal:
            return g(nbar).nats();
    }
    throw DomainError("unknown detection");
}

double rate_integral(const SpectralAllocation &received, Detection d) {
    if (received.is_empty()) {
        return 0.0;
    }
    if (received.is_table()) {
        double total = 0.0;
        for (const auto &[omega, nbar] : received.bins()) {
            total += mode_rate(nbar, d);
        }
        return total * received.bin_width() / (2.0 * kPi);
    }
    return integrate_singular([&](double omega) { return mode_rate(received(omega), d); }, 0.0,
                              received.upper_limit()) /
           (2.0 * kPi);
}

CornerAllocations corner_allocations(const WidebandModel &w, Detection family) {
    if (w.num_users() != 2) {
        throw DomainError("corner_allocations is defined for two users");
    }
    const double eta = w.transmissivities()[0];
    const RateRegion region = wideband_region(w, family);
    const double b1 = region.bound(0b01);
    const double b12 = region.bound(0b11);

    CornerAllocations out{SpectralAllocation::empty(w.hbar()),
                          SpectralAllocation::empty(w.hbar()),
                          RatePoint(0.0, 0.0),
                          RatePoint(b1, std::max(0.0, b12 - b1)),
                          0,
                          0.0,
                          false};

    if (eta == 1.0 || eta == 0.0) {
        out.single_user_fallback = true;
        const int user = eta == 1.0 ? 1 : 2;
        SpectralAllocation alone = wideband_allocation(w, singleton(user), family);
        const double rate = rate_integral(alone, family);
        (user == 1 ? out.alice : out.bob) = alone;
        out.achieved = user == 1 ? RatePoint(rate, 0.0) : RatePoint(0.0, rate);
        return out;
    }

    const SpectralAllocation alice_rx = wideband_allocation(w, 0b01, family);
    const SpectralAllocation combined_rx = wideband_allocation(w, 0b11, family);
    out.alice = alice_rx.scaled(1.0 / eta);

    const double upper = combined_rx.upper_limit();
    out.min_residual = 0.0;
    constexpr int kChecks = 4000;
    for (int i = 1; i <= kChecks; ++i) {
        const double omega = upper * static_cast<double>(i) / kChecks;
        const double residual = combined_rx(omega) - alice_rx(omega);
        if (residual < -1e-12 * std::max(1.0, combined_rx(omega))) {
            ++out.nonnegativity_violations;
        }
        out.min_residual = std::min(out.min_residual, residual);
    }

    const double cutoff = combined_rx.cutoff();
    const double ceiling = combined_rx.upper_limit();
    const double bob_budget = w.powers()[1];
    out.bob = SpectralAllocation(
        [alice_rx, combined_rx, eta](double omega) { return (combined_rx(omega) - alice_rx(omega)) / (1.0 - eta); },
        cutoff, ceiling, w.hbar(), bob_budget);

    const double r1 = rate_integral(alice_rx, family);
    // Alice's cutoff is a kink of the integrand; integrate either side of it separately.
    auto bob_gain = [&](double omega) {
        return mode_rate(combined_rx(omega), family) - mode_rate(alice_rx(omega), family);
    };
    const double split = std::min(alice_rx.upper_limit(), upper);
    const double r2 = (integrate_singular(bob_gain, 0.0, split) + integrate_smooth(bob_gain, split, upper)) / (2.0 * kPi);
    out.achieved = RatePoint(std::max(0.0, r1), std::max(0.0, r2));
    return out;
}

namespace {

double bin_allocation(double lambda, double hbar_omega, Detection d) {
    switch (d) {
        case Detection::homodyne:
            return std::max(0.0, 1.0 / (2.0 * lambda * hbar_omega) - 0.25);
        case Detection::heterodyne:
            return std::max(0.0, 1.0 / (lambda * hbar_omega) - 1.0);
        case Detection::optimal:
            return 1.0 / std::expm1(lambda * hbar_omega);
    }
    return 0.0;
}

}  // namespace

DiscretizedWaterfill discretized_waterfill(const WidebandModel &w, Subset which, double bin_width, Detection d) {
    require_which(w, which);
    if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
        throw DomainError("bin width must be positive");
    }
    const double power = w.received_power(which);
    const double hbar = w.hbar();
    DiscretizedWaterfill out;
    out.allocation = SpectralAllocation::empty(hbar);
    if (power <= 0.0) {
        return out;
    }
    const double ceiling = frequency_ceiling(power, hbar);
    const auto count = static_cast<std::size_t>(std::ceil(ceiling / bin_width));
    if (count > 50'000'000) {
        throw DomainError("bin width too small for the frequency ceiling (" + std::to_string(count) + " bins)");
    }
    std::vector<double> omegas(count);
    for (std::size_t i = 0; i < count; ++i) {
        omegas[i] = (static_cast<double>(i) + 0.5) * bin_width;
    }
    const double weight = bin_width / (2.0 * kPi);

    auto spent = [&](double lambda) {
        double total = 0.0;
        for (double omega : omegas) {
            total += hbar * omega * bin_allocation(lambda, hbar * omega, d);
        }
        return total * weight;
    };

    // Spending decreases in lambda. Bracket in log space, then bisect.
    double lo = 1.0 / (hbar * ceiling);
    double hi = lo;
    while (spent(lo) < power) {
        lo /= 4.0;
    }
    while (spent(hi) > power) {
        hi *= 4.0;
    }
    double residual = 1.0;
    int it = 0;
    for (; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);
        const double s = spent(mid);
        residual = (s - power) / power;
        if (std::abs(residual) < 1e-13 || hi / lo - 1.0 < 1e-15) {
            lo = hi = mid;
            break;
        }
        (s > power ? lo : hi) = mid;
    }
    if (std::abs(residual) > 1e-9) {
        throw NumericError("water-filling multiplier bisection did not converge in 200 iterations", residual);
    }
    const double lambda = lo;
    std::vector<double> values(count);
    double rate = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = bin_allocation(lambda, hbar * omegas[i], d);
        rate += mode_rate(values[i], d);
    }
    out.rate = rate * weight;
    out.multiplier = lambda;
    out.iterations = it + 1;
    out.budget_residual = residual;
    out.bins = static_cast<int>(count);
    out.allocation = SpectralAllocation::table(std::move(omegas), std::move(values), bin_width, hbar, power);
    return out;
}

}  // namespace bmac
