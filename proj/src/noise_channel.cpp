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

#include "bosonic_mac/noise_channel.hpp"

#include <algorithm>
#include <cmath>

#include "bosonic_mac/errors.hpp"
#include "bosonic_mac/hsh_gaussian.hpp"

namespace bmac {

GaussianNoiseChannel::GaussianNoiseChannel(double eta, CovMatrix vb) : eta_(eta), vb_(vb) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw DomainError("transmissivity must lie in (0, 1]");
    }
    vb_.require_physical("noise covariance Vb");
}

double equivalent_thermal(const GaussianNoiseChannel &ch) {
    return symplectic_photons(ch.vb());
}

CovMatrix matched_input_state(const GaussianNoiseChannel &ch) {
    return squeeze_covariance(whitening_params(ch.vb()));
}

namespace {

CovMatrix output_state(const GaussianNoiseChannel &ch, const CovMatrix &input) {
    return ch.eta() * input + (1.0 - ch.eta()) * ch.vb();
}

double upper_bound(const GaussianNoiseChannel &ch, double nbar) {
    const double eta = ch.eta();
    return g(eta * nbar + (1.0 - eta) * ch.nbar_b()).nats() - g((1.0 - eta) * equivalent_thermal(ch)).nats();
}

}  // namespace

double threshold(const GaussianNoiseChannel &ch) {
    const CovMatrix v = matched_input_state(ch);
    const CovMatrix vp = output_state(ch, v);
    return std::max(0.0, vp.anisotropy() / ch.eta() + v.trace() - 0.5);
}

std::string_view validity_name(Validity v) {
    return v == Validity::exact ? "exact (conjecture-conditional)" : "bounds only";
}

CapacityResult capacity(const GaussianNoiseChannel &ch, double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw DomainError("input photon number must be finite and nonnegative");
    }
    const double thresh = threshold(ch);
    const Entropy upper(upper_bound(ch, nbar));
    if (nbar >= thresh) {
        return {upper, upper, upper, Validity::exact, thresh};
    }
    const double eta = ch.eta();
    // Coherent-state code: vacuum input, whole budget in the displacement.
    double lower = rmax_individual(output_state(ch, CovMatrix::vacuum()), eta * nbar).value.nats();
    // Matched squeezed code, when its squeezing fits the budget.
    const CovMatrix v = matched_input_state(ch);
    const double spare = eta * (nbar - v.mean_photons());
    if (spare >= 0.0) {
        lower = std::max(lower, rmax_individual(output_state(ch, v), spare).value.nats());
    }
    lower = std::min(lower, upper.nats());
    return {upper, Entropy(lower), upper, Validity::bounds_only, thresh};
}

NoiseComparison squeezed_noise_comparison(const GaussianNoiseChannel &squeezed, const GaussianNoiseChannel &thermal,
                                          double nbar) {
    NoiseComparison out;
    const double nb = squeezed.nbar_b();
    if (std::abs(nb - thermal.nbar_b()) > 1e-12 * std::max(1.0, nb)) {
        throw DomainError("comparison needs equal noise photon numbers");
    }
    const CapacityResult cs = capacity(squeezed, nbar);
    const CapacityResult ct = capacity(thermal, nbar);
    out.squeezed = cs.capacity;
    out.thermal = ct.capacity;
    if (cs.validity != Validity::exact || ct.validity != Validity::exact) {
        out.refused = true;
        out.reason = "input photon number below threshold; only bounds are available";
        return out;
    }
    out.difference = cs.capacity.nats() - ct.capacity.nats();
    return out;
}

}  // namespace bmac
