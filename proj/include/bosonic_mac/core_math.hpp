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

#ifndef BOSONIC_MAC_CORE_MATH_HPP
#define BOSONIC_MAC_CORE_MATH_HPP

#include <complex>
#include <numbers>
#include <string_view>

namespace bmac {

/// Information unit. Everything is computed in nats; bits exist only at presentation.
enum class Unit { nats, bits };

inline constexpr double kBitsPerNat = std::numbers::log2e;

/// Converts a value in nats to `unit`. The only place the 1/ln 2 factor is applied.
constexpr double in_unit(double nats, Unit unit) {
    return unit == Unit::bits ? nats * kBitsPerNat : nats;
}

std::string_view unit_name(Unit unit);
Unit parse_unit(std::string_view name);

/// Slack allowed when a mathematically nonnegative entropy difference rounds below zero.
inline constexpr double kEntropyRoundoff = 1e-9;
/// Slack on det(V) >= 1/16 when checking that a covariance describes a quantum state.
inline constexpr double kPhysicalTolerance = 1e-12;

/// Nonnegative entropy in nats.
class Entropy {
   public:
    constexpr Entropy() = default;
    /// Throws DomainError below -kEntropyRoundoff; smaller negative roundoff clamps to 0.
    explicit Entropy(double nats);

    constexpr double nats() const {
        return nats_;
    }
    constexpr double bits() const {
        return nats_ * kBitsPerNat;
    }
    constexpr double in(Unit unit) const {
        return in_unit(nats_, unit);
    }

    friend constexpr bool operator==(Entropy, Entropy) = default;

   private:
    double nats_ = 0.0;
};

/// 2x2 real matrix in row-major order, used for single-mode symplectic maps.
struct Mat2 {
    double a, b, c, d;
};

/// Symmetric quadrature covariance matrix [[v1, v12], [v12, v2]].
///
/// Construction enforces positive semidefiniteness. Whether the matrix also
/// describes a quantum state (det >= 1/16) is a separate query, since
/// classical modulation covariances are PSD but need not satisfy it.
class CovMatrix {
   public:
    CovMatrix(double v1, double v2, double v12 = 0.0);

    static CovMatrix isotropic(double variance) {
        return {variance, variance, 0.0};
    }
    static CovMatrix vacuum() {
        return isotropic(0.25);
    }
    /// Covariance of a thermal state with mean photon number `nbar`: ((2 nbar + 1)/4) I.
    static CovMatrix thermal(double nbar);

    double v1() const {
        return v1_;
    }
    double v2() const {
        return v2_;
    }
    double v12() const {
        return v12_;
    }
    double det() const {
        return v1_ * v2_ - v12_ * v12_;
    }
    double trace() const {
        return v1_ + v2_;
    }
    /// Mean photon number of the zero-mean state with this covariance: v1 + v2 - 1/2.
    double mean_photons() const {
        return v1_ + v2_ - 0.5;
    }
    /// Eigenvalue splitting sqrt((v1 - v2)^2 + 4 v12^2).
    double anisotropy() const;

    bool is_physical() const;
    /// Throws UnphysicalStateError naming `what` unless is_physical().
    void require_physical(std::string_view what) const;

    friend CovMatrix operator+(const CovMatrix &x, const CovMatrix &y);
    friend CovMatrix operator*(double s, const CovMatrix &x);
    friend bool operator==(const CovMatrix &, const CovMatrix &) = default;

   private:
    double v1_, v2_, v12_;
};

/// Squeeze parameters mu = cosh r, nu = e^{i theta} sinh r for z = r e^{i theta}.
class SqueezeParams {
   public:
    /// Validates mu >= 1 and mu^2 - |nu|^2 = 1 to 1e-12 (relative to mu^2).
    SqueezeParams(double mu, std::complex<double> nu);

    static SqueezeParams from_polar(double r, double theta);
    static SqueezeParams identity() {
        return from_polar(0.0, 0.0);
    }

    double mu() const {
        return mu_;
    }
    std::complex<double> nu() const {
        return nu_;
    }
    double r() const;
    /// Squeeze angle in [0, 2 pi).
    double theta() const;

   private:
    double mu_;
    std::complex<double> nu_;
};

/// Bose-Einstein entropy g(x) = (x+1) ln(x+1) - x ln x, with g(0) = 0.
Entropy g(double x);

/// Entropy of the single-mode Gaussian state with covariance V: g(2 sqrt(det V) - 1/2).
Entropy gaussian_entropy(const CovMatrix &v);

/// Equivalent thermal photon number 2 sqrt(det V) - 1/2 of a physical covariance,
/// clamped at 0 against roundoff for pure states.
double symplectic_photons(const CovMatrix &v);

/// (1/4) [[|mu+nu|^2, 2 Im(mu nu)], [2 Im(mu nu), |mu-nu|^2]].
CovMatrix squeeze_covariance(const SqueezeParams &p);

/// Squeeze whose covariance has the same eigenvectors and eigenvalue ratio as `vb`,
/// so that vb = 4 sqrt(det vb) * squeeze_covariance(p). Isotropic inputs give r = 0, theta = 0.
SqueezeParams whitening_params(const CovMatrix &vb);

/// Symplectic matrix S with S S^T / 4 = squeeze_covariance(p). S is symmetric.
Mat2 squeeze_symplectic(const SqueezeParams &p);
Mat2 inverse(const Mat2 &m);

/// S V S^T.
CovMatrix congruence(const Mat2 &s, const CovMatrix &v);

/// Applies the inverse of whitening_params(vb); the result is sqrt(det vb) I.
CovMatrix whiten(const CovMatrix &vb);

}  // namespace bmac

#endif
