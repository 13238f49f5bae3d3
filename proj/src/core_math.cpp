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

#include "bosonic_mac/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bosonic_mac/errors.hpp"

namespace bmac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) {
        t += kTwoPi;
    }
    // fmod can return exactly 2 pi after the shift for tiny negative inputs.
    return t >= kTwoPi ? 0.0 : t;
}

}  // namespace

std::string_view unit_name(Unit unit) {
    return unit == Unit::bits ? "bits" : "nats";
}

Unit parse_unit(std::string_view name) {
    if (name == "nats") {
        return Unit::nats;
    }
    if (name == "bits") {
        return Unit::bits;
    }
    throw DomainError("unknown unit '" + std::string(name) + "' (expected nats or bits)");
}

Entropy::Entropy(double nats) : nats_(nats) {
    if (!std::isfinite(nats)) {
        throw DomainError("entropy must be finite");
    }
    if (nats < 0.0) {
        if (nats < -kEntropyRoundoff) {
            throw DomainError("entropy must be nonnegative, got " + std::to_string(nats));
        }
        nats_ = 0.0;
    }
}

CovMatrix::CovMatrix(double v1, double v2, double v12) : v1_(v1), v2_(v2), v12_(v12) {
    if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(v12)) {
        throw DomainError("covariance entries must be finite");
    }
    double scale = std::max({1.0, std::abs(v1), std::abs(v2)});
    if (v1 < 0.0 || v2 < 0.0 || det() < -1e-14 * scale * scale) {
        throw DomainError("covariance matrix is not positive semidefinite");
    }
}

CovMatrix CovMatrix::thermal(double nbar) {
    if (!(nbar >= 0.0)) {
        throw DomainError("thermal photon number must be nonnegative");
    }
    return isotropic((2.0 * nbar + 1.0) / 4.0);
}

double CovMatrix::anisotropy() const {
    return std::hypot(v1_ - v2_, 2.0 * v12_);
}

bool CovMatrix::is_physical() const {
    return det() >= 1.0 / 16.0 - kPhysicalTolerance;
}

void CovMatrix::require_physical(std::string_view what) const {
    if (!is_physical()) {
        throw UnphysicalStateError(std::string(what) + " is not a physical state covariance (det = " +
                                   std::to_string(det()) + " < 1/16)");
    }
}

CovMatrix operator+(const CovMatrix &x, const CovMatrix &y) {
    return {x.v1_ + y.v1_, x.v2_ + y.v2_, x.v12_ + y.v12_};
}

CovMatrix operator*(double s, const CovMatrix &x) {
    if (s < 0.0) {
        throw DomainError("covariance scale factor must be nonnegative");
    }
    return {s * x.v1_, s * x.v2_, s * x.v12_};
}

SqueezeParams::SqueezeParams(double mu, std::complex<double> nu) : mu_(mu), nu_(nu) {
    if (!std::isfinite(mu) || !std::isfinite(nu.real()) || !std::isfinite(nu.imag())) {
        throw DomainError("squeeze parameters must be finite");
    }
    if (mu < 1.0 - 1e-12) {
        throw DomainError("squeeze parameter mu = cosh r must be >= 1");
    }
    double residual = mu * mu - std::norm(nu) - 1.0;
    if (std::abs(residual) > 1e-12 * mu * mu) {
        throw DomainError("squeeze parameters violate mu^2 - |nu|^2 = 1 (residual " + std::to_string(residual) +
                          ")");
    }
}

SqueezeParams SqueezeParams::from_polar(double r, double theta) {
    if (!(r >= 0.0)) {
        throw DomainError("squeeze magnitude r must be nonnegative");
    }
    return {std::cosh(r), std::polar(std::sinh(r), theta)};
}

double SqueezeParams::r() const {
    return std::asinh(std::abs(nu_));
}

double SqueezeParams::theta() const {
    if (nu_ == std::complex<double>{}) {
        return 0.0;
    }
    return wrap_angle(std::arg(nu_));
}

Entropy g(double x) {
    if (!(x >= 0.0)) {
        throw DomainError("g(x) requires x >= 0, got " + std::to_string(x));
    }
    if (x == 0.0) {
        return Entropy{};
    }
    if (x < 1e-12) {
        return Entropy(x - x * std::log(x));
    }
    // ln(1+x) + x ln(1 + 1/x) avoids the cancellation in (x+1)ln(x+1) - x ln x for large x.
    return Entropy(std::log1p(x) + x * std::log1p(1.0 / x));
}

double symplectic_photons(const CovMatrix &v) {
    v.require_physical("covariance");
    return std::max(0.0, 2.0 * std::sqrt(v.det()) - 0.5);
}

Entropy gaussian_entropy(const CovMatrix &v) {
    return g(symplectic_photons(v));
}

CovMatrix squeeze_covariance(const SqueezeParams &p) {
    const std::complex<double> mu{p.mu(), 0.0};
    const std::complex<double> nu = p.nu();
    double off = 2.0 * (mu * nu).imag() / 4.0;
    return {std::norm(mu + nu) / 4.0, std::norm(mu - nu) / 4.0, off};
}

SqueezeParams whitening_params(const CovMatrix &vb) {
    vb.require_physical("noise covariance");
    const double mean = vb.trace() / 2.0;
    const double half_split = vb.anisotropy() / 2.0;
    if (half_split <= 1e-15 * mean) {
        return SqueezeParams::identity();
    }
    const double lambda_max = mean + half_split;
    // det / lambda_max avoids cancellation in mean - half_split for strongly squeezed inputs.
    const double lambda_min = vb.det() / lambda_max;
    const double phi = 0.5 * std::atan2(2.0 * vb.v12(), vb.v1() - vb.v2());
    return SqueezeParams::from_polar(0.25 * std::log(lambda_max / lambda_min), wrap_angle(2.0 * phi));
}

Mat2 squeeze_symplectic(const SqueezeParams &p) {
    const double r = p.r();
    const double half = p.theta() / 2.0;
    const double c = std::cos(half);
    const double s = std::sin(half);
    const double up = std::exp(r);
    const double down = std::exp(-r);
    // R(half) diag(e^r, e^-r) R(half)^T
    return {up * c * c + down * s * s, (up - down) * c * s, (up - down) * c * s, up * s * s + down * c * c};
}

Mat2 inverse(const Mat2 &m) {
    const double det = m.a * m.d - m.b * m.c;
    if (det == 0.0) {
        throw DomainError("singular 2x2 matrix");
    }
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

CovMatrix congruence(const Mat2 &s, const CovMatrix &v) {
    // (S V) S^T with V symmetric.
    const double p11 = s.a * v.v1() + s.b * v.v12();
    const double p12 = s.a * v.v12() + s.b * v.v2();
    const double p21 = s.c * v.v1() + s.d * v.v12();
    const double p22 = s.c * v.v12() + s.d * v.v2();
    const double r11 = p11 * s.a + p12 * s.b;
    const double r22 = p21 * s.c + p22 * s.d;
    const double r12 = 0.5 * ((p11 * s.c + p12 * s.d) + (p21 * s.a + p22 * s.b));
    return {r11, r22, r12};
}

CovMatrix whiten(const CovMatrix &vb) {
    return congruence(inverse(squeeze_symplectic(whitening_params(vb))), vb);
}

}  // namespace bmac
