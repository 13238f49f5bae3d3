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

#ifndef BOSONIC_MAC_FOCK_ORACLE_HPP
#define BOSONIC_MAC_FOCK_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "bosonic_mac/core_math.hpp"

namespace bmac {

/// Density operator truncated to at most K photons (dimension K + 1).
struct FockOperator {
    int dim = 0;
    Eigen::MatrixXcd matrix;
    /// 1 - trace: probability mass lost to the truncation.
    double trace_deficit = 0.0;

    /// Throws NumericError unless Hermitian to 1e-12, PSD to -1e-10 and the trace lies
    /// in [1 - deficit_budget, 1] (with 1e-12 slack).
    void validate(double deficit_budget) const;
    std::vector<double> eigenvalues() const;
};

/// Projector onto the coherent state |alpha>, requires K >= 10 (1 + |alpha|^2).
FockOperator coherent_fock(std::complex<double> alpha, int k);

/// -sum lambda ln lambda over eigenvalues above 1e-14.
Entropy von_neumann_entropy(const FockOperator &rho);

/// Truncated Bose-Einstein state (unnormalized), requires K >= 30 (1 + nbar).
FockOperator thermal_fock(double nbar, int k);
Entropy thermal_entropy_numeric(double nbar, int k);

/// Gauss-Laguerre nodes and weights for the weight e^{-s} on [0, inf), n <= 150.
struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
LaguerreRule gauss_laguerre(int n);

struct ModulationQuadrature {
    int radial_nodes = 64;
    /// Equispaced phase nodes; 0 selects 2K + 1, which integrates every Fock coherence exactly.
    int angular_nodes = 0;
    /// Rotation applied to every phase node.
    double phase_offset = 0.0;
};

struct ModulatedAverage {
    FockOperator rho;
    Entropy entropy;
    /// Largest absolute off-diagonal element.
    double off_diagonal_mass = 0.0;
};

/// Receiver state averaged over Gaussian-modulated coherent inputs of both users:
/// the output amplitude is circular Gaussian with mean photon number eta nbar_A + (1-eta) nbar_B.
ModulatedAverage modulated_average(double eta, double nbar_a, double nbar_b, int k,
                                   const ModulationQuadrature &quad = {});
Entropy modulated_average_entropy(double eta, double nbar_a, double nbar_b, int k, int radial_nodes = 64);

struct TruncationRow {
    int k;
    double entropy;
    /// Exact entropy missing from the truncated thermal state:
    /// -tail ln(tail) + tail g(nbar), tail = (nbar / (1 + nbar))^(K+1).
    double gap_bound;
};

/// Truncated thermal entropies for an increasing K list, without the K >= 30 (1 + nbar) guard.
std::vector<TruncationRow> truncation_convergence(double nbar, const std::vector<int> &k_list);

}  // namespace bmac

#endif
