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

#include "bosonic_mac/coherent_mac.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "bosonic_mac/errors.hpp"

namespace bmac {

std::string_view detection_name(Detection d) {
    switch (d) {
        case Detection::homodyne:
            return "homodyne";
        case Detection::heterodyne:
            return "heterodyne";
        case Detection::optimal:
            return "optimal";
    }
    return "unknown";
}

Detection parse_detection(std::string_view name) {
    for (Detection d : {Detection::homodyne, Detection::heterodyne, Detection::optimal}) {
        if (name == detection_name(d)) {
            return d;
        }
    }
    throw DomainError("unknown detection '" + std::string(name) + "'");
}

MacModel::MacModel(std::vector<double> transmissivities, std::vector<double> photon_budgets)
    : etas_(std::move(transmissivities)), nbars_(std::move(photon_budgets)) {
    if (etas_.empty() || static_cast<int>(etas_.size()) > kMaxUsers) {
        throw DomainError("MAC needs between 1 and " + std::to_string(kMaxUsers) + " users");
    }
    if (etas_.size() != nbars_.size()) {
        throw DomainError("transmissivity and photon-budget lists differ in length");
    }
    double total = 0.0;
    for (double eta : etas_) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw DomainError("transmissivities must lie in [0, 1]");
        }
        total += eta;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw DomainError("transmissivities must sum to 1, got " + std::to_string(total));
    }
    for (double n : nbars_) {
        if (!(n >= 0.0) || !std::isfinite(n)) {
            throw DomainError("photon budgets must be finite and nonnegative");
        }
    }
}

MacModel MacModel::two_user(double eta, double nbar_a, double nbar_b) {
    return {{eta, 1.0 - eta}, {nbar_a, nbar_b}};
}

double MacModel::received_photons(Subset s) const {
    double total = 0.0;
    for (int i : members(s)) {
        const auto k = static_cast<std::size_t>(i - 1);
        total += etas_.at(k) * nbars_.at(k);
    }
    return total;
}

NoisyMacModel::NoisyMacModel(MacModel base_model, double noise) : base(std::move(base_model)), noise_photons(noise) {
    if (base.num_users() != 2) {
        throw DomainError("the additive-noise MAC is defined for two users");
    }
    if (!(noise >= 0.0) || !std::isfinite(noise)) {
        throw DomainError("additive noise photon number must be finite and nonnegative");
    }
}

double two_user_received_photons(double eta, double nbar_a, double nbar_b) {
    return MacModel::two_user(eta, nbar_a, nbar_b).received_photons(0b11);
}

RateRegion homodyne_region(const MacModel &m) {
    return subset_region(m.num_users(), [&](Subset s) { return 0.5 * std::log1p(4.0 * m.received_photons(s)); });
}

RateRegion heterodyne_region(const MacModel &m) {
    return subset_region(m.num_users(), [&](Subset s) { return std::log1p(m.received_photons(s)); });
}

RateRegion optimal_region(const MacModel &m, bool allow_extension) {
    if (m.num_users() > 2 && !allow_extension) {
        throw DomainError("the joint-measurement region is stated for two users; pass the extension flag for " +
                          std::to_string(m.num_users()));
    }
    RateRegion region =
        subset_region(m.num_users(), [&](Subset s) { return g(m.received_photons(s)).nats(); });
    if (m.num_users() > 2) {
        return {region.num_users(), region.bounds(), region.unit(),
                "extension: m-user generalization g(sum eta_i nbar_i) of the two-user joint-measurement region"};
    }
    return region;
}

RateRegion noisy_optimal_region(const NoisyMacModel &nm) {
    const double n = nm.noise_photons;
    const double floor = g(n).nats();
    return subset_region(nm.base.num_users(),
                         [&](Subset s) { return g(nm.base.received_photons(s) + n).nats() - floor; });
}

RateRegion region_for(const MacModel &m, Detection d, bool allow_extension) {
    switch (d) {
        case Detection::homodyne:
            return homodyne_region(m);
        case Detection::heterodyne:
            return heterodyne_region(m);
        case Detection::optimal:
            return optimal_region(m, allow_extension);
    }
    throw DomainError("unknown detection");
}

namespace {

constexpr std::int64_t kChunk = 1 << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Raw first and second moments of (x_1..x_m, y) for one real quadrature.
struct Moments {
    Eigen::VectorXd sum;
    Eigen::MatrixXd cross;
};

struct ChunkMoments {
    Moments re, im;
};

ChunkMoments simulate_chunk(const MacModel &m, bool heterodyne, std::int64_t count, std::uint64_t seed) {
    const int users = m.num_users();
    const int dim = users + 1;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> unit(0.0, 1.0);

    std::vector<double> amp(static_cast<std::size_t>(users));
    std::vector<double> gain(static_cast<std::size_t>(users));
    for (int i = 0; i < users; ++i) {
        const double n = m.photon_budgets()[static_cast<std::size_t>(i)];
        // Homodyne puts the whole budget in the measured quadrature; heterodyne splits it.
        amp[static_cast<std::size_t>(i)] = std::sqrt(heterodyne ? n / 2.0 : n);
        gain[static_cast<std::size_t>(i)] = std::sqrt(m.transmissivities()[static_cast<std::size_t>(i)]);
    }
    const double noise_sd = std::sqrt(heterodyne ? 0.5 : 0.25);

    ChunkMoments out{{Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Zero(dim, dim)},
                     {Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Zero(dim, dim)}};
    Eigen::VectorXd v(dim);
    auto draw = [&](Moments &acc) {
        double y = 0.0;
        for (int i = 0; i < users; ++i) {
            const double x = amp[static_cast<std::size_t>(i)] * unit(rng);
            v[i] = x;
            y += gain[static_cast<std::size_t>(i)] * x;
        }
        v[users] = y + noise_sd * unit(rng);
        acc.sum += v;
        acc.cross.selfadjointView<Eigen::Lower>().rankUpdate(v);
    };
    for (std::int64_t k = 0; k < count; ++k) {
        draw(out.re);
        if (heterodyne) {
            draw(out.im);
        }
    }
    out.re.cross = out.re.cross.selfadjointView<Eigen::Lower>();
    out.im.cross = out.im.cross.selfadjointView<Eigen::Lower>();
    return out;
}

/// Var(Y | X_T) from a joint covariance whose last index is Y.
double conditional_variance(const Eigen::MatrixXd &cov, const std::vector<int> &given) {
    const int y = static_cast<int>(cov.rows()) - 1;
    std::vector<int> idx;
    for (int i : given) {
        // A constant input (zero budget) carries no information to condition on.
        if (cov(i, i) > 0.0) {
            idx.push_back(i);
        }
    }
    if (idx.empty()) {
        return cov(y, y);
    }
    const auto k = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd ctt(k, k);
    Eigen::VectorXd cty(k);
    for (Eigen::Index a = 0; a < k; ++a) {
        cty[a] = cov(idx[static_cast<std::size_t>(a)], y);
        for (Eigen::Index b = 0; b < k; ++b) {
            ctt(a, b) = cov(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
        }
    }
    return cov(y, y) - cty.dot(ctt.ldlt().solve(cty));
}

Eigen::MatrixXd covariance_from(const Moments &mo, std::int64_t n) {
    const Eigen::VectorXd mean = mo.sum / static_cast<double>(n);
    return (mo.cross - static_cast<double>(n) * mean * mean.transpose()) / static_cast<double>(n - 1);
}

double plug_in_information(const Eigen::MatrixXd &cov, int users, Subset s) {
    std::vector<int> complement;
    std::vector<int> everyone;
    for (int i = 0; i < users; ++i) {
        everyone.push_back(i);
        if (!(s & (Subset{1} << i))) {
            complement.push_back(i);
        }
    }
    const double partial = conditional_variance(cov, complement);
    const double residual = conditional_variance(cov, everyone);
    return 0.5 * std::log(partial / residual);
}

}  // namespace

QuadratureEstimate simulate_quadrature(const MacModel &m, Detection detection, std::int64_t samples,
                                       std::uint64_t seed) {
    if (detection == Detection::optimal) {
        throw DomainError("simulate_quadrature models homodyne or heterodyne detection only");
    }
    if (samples < 2) {
        throw DomainError("simulate_quadrature needs at least 2 samples");
    }
    const bool heterodyne = detection == Detection::heterodyne;
    const int users = m.num_users();
    const int dim = users + 1;
    const std::int64_t chunks = (samples + kChunk - 1) / kChunk;

    // Each chunk owns an independent stream; partial moments are reduced in chunk order,
    // so the result does not depend on the thread count.
    std::vector<ChunkMoments> parts(static_cast<std::size_t>(chunks));
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(chunks)));
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::int64_t c = w; c < chunks; c += workers) {
                const std::int64_t count = std::min(kChunk, samples - c * kChunk);
                parts[static_cast<std::size_t>(c)] =
                    simulate_chunk(m, heterodyne, count, splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(c))));
            }
        }));
    }
    for (auto &j : jobs) {
        j.get();
    }
    Moments re{Eigen::VectorXd::Zero(dim), Eigen::MatrixXd::Zero(dim, dim)};
    Moments im = re;
    for (const ChunkMoments &p : parts) {
        re.sum += p.re.sum;
        re.cross += p.re.cross;
        im.sum += p.im.sum;
        im.cross += p.im.cross;
    }

    QuadratureEstimate out;
    out.num_users = users;
    out.samples = samples;
    out.low_sample_warning = samples < kMinQuadratureSamples;
    const Eigen::MatrixXd cov_re = covariance_from(re, samples);
    const Eigen::MatrixXd cov_im = heterodyne ? covariance_from(im, samples) : Eigen::MatrixXd();
    for (Subset s = 1; s <= full_set(users); ++s) {
        double info = plug_in_information(cov_re, users, s);
        if (heterodyne) {
            info += plug_in_information(cov_im, users, s);
        }
        out.estimates.push_back(info);
    }
    return out;
}

}  // namespace bmac
