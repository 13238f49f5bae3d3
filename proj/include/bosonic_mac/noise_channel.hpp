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

#ifndef BOSONIC_MAC_NOISE_CHANNEL_HPP
#define BOSONIC_MAC_NOISE_CHANNEL_HPP

#include <string>
#include <string_view>

#include "bosonic_mac/core_math.hpp"

namespace bmac {

/// Single-user channel: the signal mode is mixed on a beam splitter of transmissivity eta
/// with a noise mode in a zero-mean Gaussian state of covariance Vb.
class GaussianNoiseChannel {
   public:
    GaussianNoiseChannel(double eta, CovMatrix vb);

    double eta() const {
        return eta_;
    }
    const CovMatrix &vb() const {
        return vb_;
    }
    /// Mean photon number of the noise mode, V1 + V2 - 1/2.
    double nbar_b() const {
        return vb_.mean_photons();
    }

   private:
    double eta_;
    CovMatrix vb_;
};

/// 2 sqrt(det Vb) - 1/2.
double equivalent_thermal(const GaussianNoiseChannel &ch);

/// Input squeezed-state covariance matched to the noise: Vb / (4 sqrt(det Vb)).
CovMatrix matched_input_state(const GaussianNoiseChannel &ch);

/// Input photon number above which the matched squeezed code meets the capacity upper bound.
double threshold(const GaussianNoiseChannel &ch);

enum class Validity { exact, bounds_only };
std::string_view validity_name(Validity v);

struct CapacityResult {
    /// The capacity when exact, otherwise the upper bound.
    Entropy capacity;
    Entropy lower;
    Entropy upper;
    Validity validity;
    double threshold;
    /// Every value rests on the minimum-output-entropy conjecture.
    std::string provenance = "conjecture-conditional";
};

/// Above threshold: C = g(eta nbar + (1-eta) nbar_b) - g((1-eta)(2 sqrt(det Vb) - 1/2)).
/// Below it the same expression is only an upper bound; the lower bound is the better of the
/// matched squeezed code and the coherent-state code, both evaluated with the HSH formula.
CapacityResult capacity(const GaussianNoiseChannel &ch, double nbar);

struct NoiseComparison {
    bool refused = false;
    std::string reason;
    double difference = 0.0;
    Entropy squeezed;
    Entropy thermal;
};

/// C_squeezed - C_thermal for two channels with equal noise photon numbers; refused unless
/// both inputs are above threshold.
NoiseComparison squeezed_noise_comparison(const GaussianNoiseChannel &squeezed, const GaussianNoiseChannel &thermal,
                                          double nbar);

}  // namespace bmac

#endif
