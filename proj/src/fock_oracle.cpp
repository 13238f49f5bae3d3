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

#include "bosonic_mac/fock_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bosonic_mac/errors.hpp"

namespace bmac {

namespace {

constexpr double kEigenFloor = 1e-14;
constexpr int kMaxTruncation = 2000;

void check_k(int k) {
    if (k < 0 || k > kMaxTruncation) {
        throw DomainError("truncation K must lie in [0, " + std::to_string(kMaxTruncation) + "]");
    }
}

void check_nbar(double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw DomainError("photon number must be finite and nonnegative");
    }
}

/// Thermal state restricted to K photons; no normalization so the tail stays missing.
FockOperator thermal_unchecked(double nbar, int k) {
    FockOperator rho;
    rho.dim = k + 1;
    rho.matrix = Eigen::MatrixXcd::Zero(rho.dim, rho.dim);
    const double q = nbar / (1.0 + nbar);
    double p = 1.0 / (1.0 + nbar);
    for (int n = 0; n <= k; ++n) {
        rho.matrix(n, n) = p;
        p *= q;
    }
    rho.trace_deficit = nbar == 0.0 ? 0.0 : std::pow(q, k + 1);
    return rho;
}

}  // namespace

void FockOperator::validate(double deficit_budget) const {
    const double herm = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12) {
        throw NumericError("operator is not Hermitian", herm);
    }
    const std::vector<double> ev = eigenvalues();
    if (!ev.empty() && ev.front() < -1e-10) {
        throw NumericError("operator has a negative eigenvalue", ev.front());
    }
    const double tr = matrix.trace().real();
    if (tr > 1.0 + 1e-12 || tr < 1.0 - deficit_budget - 1e-12) {
        throw NumericError("operator trace outside its truncation budget", 1.0 - tr);
    }
}

std::vector<double> FockOperator::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

FockOperator coherent_fock(std::complex<double> alpha, int k) {
    check_k(k);
    const double n = std::norm(alpha);
    if (k < 10.0 * (1.0 + n)) {
        throw TruncationError("K = " + std::to_string(k) + " is too small for |alpha|^2 = " + std::to_string(n) +
                              "; need K >= 10 (1 + |alpha|^2)");
    }
    Eigen::VectorXcd c(k + 1);
    c[0] = std::exp(-n / 2.0);
    for (int m = 1; m <= k; ++m) {
        c[m] = c[m - 1] * alpha / std::sqrt(static_cast<double>(m));
    }
    FockOperator rho;
    rho.dim = k + 1;
    rho.matrix = c * c.adjoint();
    // Poisson tail summed directly; 1 - sum would lose it to cancellation.
    double tail = 0.0;
    if (n > 0.0) {
        double log_p = -n + (k + 1) * std::log(n) - std::lgamma(k + 2.0);
        for (int m = k + 1; m < k + 1 + 4000; ++m) {
            const double p = std::exp(log_p);
            tail += p;
            if (p < 1e-30 * std::max(tail, 1e-300) || p == 0.0) {
                break;
            }
            log_p += std::log(n) - std::log(m + 1.0);
        }
    }
    rho.trace_deficit = tail;
    return rho;
}

Entropy von_neumann_entropy(const FockOperator &rho) {
    double s = 0.0;
    for (double lam : rho.eigenvalues()) {
        if (lam > kEigenFloor) {
            s -= lam * std::log(lam);
        }
    }
    return Entropy(s);
}

FockOperator thermal_fock(double nbar, int k) {
    check_nbar(nbar);
    check_k(k);
    if (k < 30.0 * (1.0 + nbar)) {
        throw TruncationError("K = " + std::to_string(k) + " is too small for nbar = " + std::to_string(nbar) +
                              "; need K >= 30 (1 + nbar)");
    }
    return thermal_unchecked(nbar, k);
}

Entropy thermal_entropy_numeric(double nbar, int k) {
    return von_neumann_entropy(thermal_fock(nbar, k));
}

LaguerreRule gauss_laguerre(int n) {
    if (n < 1 || n > 150) {
        throw DomainError("Gauss-Laguerre rule needs between 1 and 150 nodes");
    }
    LaguerreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // Standard initial guesses, then Newton on L_n.
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * n);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - rule.nodes[static_cast<std::size_t>(i - 2)]);
        }
        double p1 = 0.0;
        double p2 = 0.0;
        double pp = 0.0;
        int it = 0;
        for (; it < 100; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
            }
            pp = (n * p1 - n * p2) / z;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-14 * std::max(1.0, z)) {
                break;
            }
        }
        if (it == 100) {
            throw NumericError("Gauss-Laguerre root did not converge", std::abs(p1));
        }
        rule.nodes[static_cast<std::size_t>(i)] = z;
        // w = -1 / (pp n L_{n-1}); the product is formed in log space.
        rule.weights[static_cast<std::size_t>(i)] =
            std::exp(-(std::log(std::abs(pp)) + std::log(static_cast<double>(n)) + std::log(std::abs(p2))));
    }
    return rule;
}

ModulatedAverage modulated_average(double eta, double nbar_a, double nbar_b, int k, const ModulationQuadrature &quad) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("transmissivity must lie in [0, 1]");
    }
    check_nbar(nbar_a);
    check_nbar(nbar_b);
    check_k(k);
    const double nbar = eta * nbar_a + (1.0 - eta) * nbar_b;
    const int dim = k + 1;
    ModulatedAverage out;
    out.rho.dim = dim;
    if (nbar == 0.0) {
        out.rho.matrix = Eigen::MatrixXcd::Zero(dim, dim);
        out.rho.matrix(0, 0) = 1.0;
        out.entropy = Entropy(0.0);
        return out;
    }
    const int angular = quad.angular_nodes > 0 ? quad.angular_nodes : 2 * k + 1;

    // Phase average of e^{i d phi} over the nodes, for every coherence order d.
    std::vector<std::complex<double>> phase(static_cast<std::size_t>(2 * k + 1));
    for (int d = -k; d <= k; ++d) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < angular; ++j) {
            const double phi = quad.phase_offset + 2.0 * std::numbers::pi * j / angular;
            acc += std::polar(1.0, d * phi);
        }
        phase[static_cast<std::size_t>(d + k)] = acc / static_cast<double>(angular);
    }

    // |gamma|^2 = u has density e^{-u/nbar}/nbar; combined with the coherent factor e^{-u}
    // the substitution u = s nbar/(1+nbar) leaves the Laguerre weight e^{-s}.
    const LaguerreRule rule = gauss_laguerre(quad.radial_nodes);
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXd amp(dim);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double u = rule.nodes[i] * nbar / (1.0 + nbar);
        const double w = rule.weights[i] / (1.0 + nbar);
        const double log_u = std::log(u);
        for (int n = 0; n <= k; ++n) {
            amp[n] = std::exp(0.5 * (n * log_u - std::lgamma(n + 1.0)));
        }
        for (int m = 0; m <= k; ++m) {
            for (int n = 0; n <= k; ++n) {
                rho(m, n) += w * amp[m] * amp[n] * phase[static_cast<std::size_t>(m - n + k)];
            }
        }
    }
    out.rho.matrix = rho;
    const double q = nbar / (1.0 + nbar);
    out.rho.trace_deficit = std::pow(q, k + 1);
    // Each diagonal element is a polynomial moment; exactness fails only when the rule is too short.
    double residual = 0.0;
    double p = 1.0 / (1.0 + nbar);
    for (int n = 0; n <= k; ++n) {
        residual = std::max(residual, std::abs(rho(n, n).real() - p));
        p *= q;
    }
    if (residual > 1e-8) {
        throw NumericError("radial quadrature did not reproduce the photon distribution", residual);
    }
    double off = 0.0;
    for (int m = 0; m < dim; ++m) {
        for (int n = 0; n < dim; ++n) {
            if (m != n) {
                off = std::max(off, std::abs(rho(m, n)));
            }
        }
    }
    out.off_diagonal_mass = off;
    out.entropy = von_neumann_entropy(out.rho);
    return out;
}

Entropy modulated_average_entropy(double eta, double nbar_a, double nbar_b, int k, int radial_nodes) {
    ModulationQuadrature quad;
    quad.radial_nodes = radial_nodes;
    return modulated_average(eta, nbar_a, nbar_b, k, quad).entropy;
}

std::vector<TruncationRow> truncation_convergence(double nbar, const std::vector<int> &k_list) {
    check_nbar(nbar);
    std::vector<TruncationRow> rows;
    int prev = -1;
    const double gn = g(nbar).nats();
    for (int k : k_list) {
        check_k(k);
        if (k <= prev) {
            throw DomainError("truncation list must be increasing");
        }
        prev = k;
        const FockOperator rho = thermal_unchecked(nbar, k);
        const double tail = rho.trace_deficit;
        const double gap = tail > 0.0 ? -tail * std::log(tail) + tail * gn : 0.0;
        rows.push_back({k, von_neumann_entropy(rho).nats(), gap});
    }
    return rows;
}

}  // namespace bmac
