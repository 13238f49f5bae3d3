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

#include "bosonic_mac/hsh_gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "bosonic_mac/errors.hpp"

namespace bmac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double wrap(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0) {
        t += kTwoPi;
    }
    // + 0.0 folds a negative zero onto +0.
    return t >= kTwoPi ? 0.0 : t + 0.0;
}

void require_budget(double n, const char *what) {
    if (!(n >= 0.0) || !std::isfinite(n)) {
        throw DomainError(std::string(what) + " must be finite and nonnegative");
    }
}

/// Entropy of a Gaussian state from its determinant, g(2 sqrt(det) - 1/2).
double entropy_from_det(double det) {
    return g(std::max(0.0, 2.0 * std::sqrt(det) - 0.5)).nats();
}

}  // namespace

HshChannel::HshChannel(CovMatrix cov, double na, double nb) : v(cov), n_a(na), n_b(nb) {
    v.require_physical("HSH state covariance");
    require_budget(na, "N_A");
    require_budget(nb, "N_B");
}

double rmax_branch_value(const CovMatrix &v, double budget, int branch) {
    v.require_physical("HSH state covariance");
    require_budget(budget, "modulation budget");
    const double floor = entropy_from_det(v.det());
    if (branch == 1) {
        return g(std::max(0.0, v.trace() + budget - 0.5)).nats() - floor;
    }
    if (branch != 2) {
        throw DomainError("branch must be 1 or 2");
    }
    const double half_total = (v.trace() + budget) / 2.0;
    const double gap = v.anisotropy() / 2.0 - budget / 2.0;
    const double max_det = half_total * half_total - gap * gap;
    return entropy_from_det(max_det) - floor;
}

RmaxResult rmax_individual(const CovMatrix &v, double budget) {
    const int branch = budget >= v.anisotropy() ? 1 : 2;
    return {Entropy(rmax_branch_value(v, budget, branch)), branch};
}

RmaxResult rmax_sum(const CovMatrix &v, double n_a, double n_b) {
    require_budget(n_a, "N_A");
    require_budget(n_b, "N_B");
    return rmax_individual(v, n_a + n_b);
}

RateRegion hsh_region(const HshChannel &ch) {
    const double r1 = rmax_individual(ch.v, ch.n_a).value.nats();
    const double r2 = rmax_individual(ch.v, ch.n_b).value.nats();
    const double r12 = rmax_sum(ch.v, ch.n_a, ch.n_b).value.nats();
    return {2, {r1, r2, r12}};
}

double modulation_rate(const CovMatrix &v, const CovMatrix &modulation) {
    return entropy_from_det((v + modulation).det()) - entropy_from_det(v.det());
}

InputCovChoice::InputCovChoice(double radius, double angle, double total) : r(radius), theta(angle), budget(total) {
    require_budget(total, "modulation budget");
    if (!(radius >= 0.0) || radius > total / 2.0 * (1.0 + 1e-12) + 1e-300) {
        throw DomainError("modulation radius must lie in [0, N/2]");
    }
    r = std::min(radius, total / 2.0);
    theta = wrap(angle);
}

CovMatrix InputCovChoice::covariance() const {
    const double c = r * std::cos(theta);
    const double s = r * std::sin(theta);
    const double half = budget / 2.0;
    // Diagonal entries are half +- c with |c| <= half; clamp roundoff below zero.
    return {std::max(0.0, half + c), std::max(0.0, half - c), s};
}

PolarPoint target_point(const CovMatrix &v) {
    const double x = (v.v2() - v.v1()) / 2.0;
    const double y = -v.v12();
    const double r = std::hypot(x, y);
    if (r == 0.0) {
        return {0.0, 0.0};
    }
    return {r, wrap(std::atan2(y, x))};
}

std::string_view case_label(HshCase c) {
    switch (c) {
        case HshCase::I:
            return "I";
        case HshCase::II:
            return "II";
        case HshCase::III:
            return "III";
        case HshCase::IV:
            return "IV";
    }
    return "?";
}

namespace {

/// Case list for budgets small <= large (the "A" role holds the smaller budget).
HshCase classify_ordered(double r_v, double small, double large) {
    if (r_v <= small / 2.0) {
        return HshCase::I;
    }
    if (r_v <= large / 2.0) {
        return HshCase::II;
    }
    if (r_v <= (small + large) / 2.0) {
        return HshCase::III;
    }
    return HshCase::IV;
}

struct PolarPair {
    double ra, ta, rb, tb;
};

PolarPair ordered_corner(HshCase c, PolarPoint p, double small, double large, Corner corner) {
    const bool lower = corner == Corner::lower;
    switch (c) {
        case HshCase::I:
            return lower ? PolarPair{p.r, p.theta, 0.0, 0.0} : PolarPair{0.0, 0.0, p.r, p.theta};
        case HshCase::II:
            return lower ? PolarPair{small / 2.0, p.theta, p.r - small / 2.0, p.theta}
                         : PolarPair{0.0, 0.0, p.r, p.theta};
        case HshCase::III:
            return lower ? PolarPair{small / 2.0, p.theta, p.r - small / 2.0, p.theta}
                         : PolarPair{p.r - large / 2.0, p.theta, large / 2.0, p.theta};
        case HshCase::IV:
            return {small / 2.0, p.theta, large / 2.0, p.theta};
    }
    return {};
}

}  // namespace

HshCase classify(const HshChannel &ch) {
    const PolarPoint p = target_point(ch.v);
    return classify_ordered(p.r, std::min(ch.n_a, ch.n_b), std::max(ch.n_a, ch.n_b));
}

CornerInputs corner_inputs(const HshChannel &ch, Corner corner) {
    const PolarPoint p = target_point(ch.v);
    // The case list is written for N_B > N_A. Otherwise exchange the users: Alice's
    // individual maximum (lower corner) is then the exchanged problem's upper corner.
    const bool swapped = !(ch.n_b > ch.n_a);
    const double small = swapped ? ch.n_b : ch.n_a;
    const double large = swapped ? ch.n_a : ch.n_b;
    const HshCase c = classify_ordered(p.r, small, large);
    const Corner ordered = swapped ? (corner == Corner::lower ? Corner::upper : Corner::lower) : corner;
    const PolarPair q = ordered_corner(c, p, small, large, ordered);

    InputCovChoice first(q.ra, q.ta, small);
    InputCovChoice second(q.rb, q.tb, large);
    if (swapped) {
        return {second, first, c, true, c == HshCase::IV};
    }
    return {first, second, c, false, c == HshCase::IV};
}

namespace {

/// Maximizes f(r, theta) over [0, r_max] x [0, 2 pi): grid then local zoom around the best cell.
template <class F>
BruteForceResult grid_zoom_max(F f, double r_max, int grid, double floor) {
    std::int64_t evals = 0;
    double best = kNegInf;
    double best_r = 0.0;
    double best_t = 0.0;
    const int r_points = r_max > 0.0 ? grid : 1;
    for (int i = 0; i < r_points; ++i) {
        const double r = r_points == 1 ? 0.0 : r_max * static_cast<double>(i) / static_cast<double>(grid - 1);
        for (int j = 0; j < grid; ++j) {
            const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
            const double val = f(r, t);
            ++evals;
            // Strict comparison keeps the lowest linear index on ties.
            if (val > best) {
                best = val;
                best_r = r;
                best_t = t;
            }
        }
    }
    double span_r = r_points == 1 ? 0.0 : r_max / static_cast<double>(grid - 1);
    double span_t = kTwoPi / static_cast<double>(grid);
    for (int round = 0; round < 48; ++round) {
        const double cr = best_r;
        const double ct = best_t;
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                const double r = std::clamp(cr + a * span_r / 2.0, 0.0, r_max);
                const double t = wrap(ct + b * span_t / 2.0);
                const double val = f(r, t);
                ++evals;
                if (val > best) {
                    best = val;
                    best_r = r;
                    best_t = t;
                }
            }
        }
        span_r /= 2.0;
        span_t /= 2.0;
    }
    return {Entropy(entropy_from_det(best) - floor), best_r, best_t, evals};
}

}  // namespace

BruteForceResult brute_force_rmax(const HshChannel &ch, RmaxTarget which, int grid) {
    if (grid < 2) {
        throw DomainError("brute-force grid needs at least 2 points per dimension");
    }
    const double budget = which == RmaxTarget::r1 ? ch.n_a : which == RmaxTarget::r2 ? ch.n_b : ch.n_a + ch.n_b;
    const double floor = entropy_from_det(ch.v.det());
    auto det_at = [&](double r, double t) { return (ch.v + InputCovChoice(r, t, budget).covariance()).det(); };
    return grid_zoom_max(det_at, budget / 2.0, grid, floor);
}

BruteForceResult brute_force_rmax_sum_4d(const HshChannel &ch, int grid) {
    if (grid < 2) {
        throw DomainError("brute-force grid needs at least 2 points per dimension");
    }
    const double ra_max = ch.n_a / 2.0;
    const double rb_max = ch.n_b / 2.0;
    auto det_at = [&](const std::array<double, 4> &x) {
        const CovMatrix mod = InputCovChoice(x[0], x[1], ch.n_a).covariance() +
                              InputCovChoice(x[2], x[3], ch.n_b).covariance();
        return (ch.v + mod).det();
    };
    std::int64_t evals = 0;
    double best = kNegInf;
    std::array<double, 4> arg{0, 0, 0, 0};
    auto radius = [&](double r_max, int i) {
        return r_max * static_cast<double>(i) / static_cast<double>(grid - 1);
    };
    auto angle = [&](int j) { return kTwoPi * static_cast<double>(j) / static_cast<double>(grid); };
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            for (int k = 0; k < grid; ++k) {
                for (int l = 0; l < grid; ++l) {
                    const std::array<double, 4> x{radius(ra_max, i), angle(j), radius(rb_max, k), angle(l)};
                    const double val = det_at(x);
                    ++evals;
                    if (val > best) {
                        best = val;
                        arg = x;
                    }
                }
            }
        }
    }
    std::array<double, 4> span{ra_max / (grid - 1), kTwoPi / grid, rb_max / (grid - 1), kTwoPi / grid};
    const std::array<double, 4> upper{ra_max, kTwoPi, rb_max, kTwoPi};
    for (int round = 0; round < 60; ++round) {
        const std::array<double, 4> centre = arg;
        for (int code = 0; code < 81; ++code) {
            std::array<double, 4> x = centre;
            int c = code;
            for (int d = 0; d < 4; ++d) {
                const int step = c % 3 - 1;
                c /= 3;
                x[d] += step * span[d] / 2.0;
                x[d] = d % 2 == 0 ? std::clamp(x[d], 0.0, upper[d]) : wrap(x[d]);
            }
            const double val = det_at(x);
            ++evals;
            if (val > best) {
                best = val;
                arg = x;
            }
        }
        for (double &s : span) {
            s /= 2.0;
        }
    }
    // Report the combined modulation point.
    const double x = arg[0] * std::cos(arg[1]) + arg[2] * std::cos(arg[3]);
    const double y = arg[0] * std::sin(arg[1]) + arg[2] * std::sin(arg[3]);
    return {Entropy(entropy_from_det(best) - entropy_from_det(ch.v.det())), std::hypot(x, y),
            wrap(std::atan2(y, x)), evals};
}

GaussianMacInput::GaussianMacInput(double eta_, CovMatrix va, CovMatrix vb, double na, double nb)
    : eta(eta_), v_a(va), v_b(vb), nbar_a(na), nbar_b(nb) {
    if (!(eta_ >= 0.0 && eta_ <= 1.0)) {
        throw DomainError("transmissivity must lie in [0, 1]");
    }
    v_a.require_physical("V_A");
    v_b.require_physical("V_B");
    require_budget(na, "nbar_A");
    require_budget(nb, "nbar_B");
}

HshChannel gaussian_mac_to_hsh(const GaussianMacInput &in) {
    auto modulation_photons = [](double nbar, const CovMatrix &v, const char *user) {
        const double spare = nbar - v.v1() - v.v2() + 0.5;
        if (spare < -1e-12 * std::max(1.0, nbar)) {
            throw FeasibilityError(std::string("user ") + user + ": the input state alone carries " +
                                   std::to_string(v.mean_photons()) + " photons, exceeding the budget " +
                                   std::to_string(nbar));
        }
        return std::max(0.0, spare);
    };
    const double spare_a = modulation_photons(in.nbar_a, in.v_a, "A");
    const double spare_b = modulation_photons(in.nbar_b, in.v_b, "B");
    const CovMatrix v = in.eta * in.v_a + (1.0 - in.eta) * in.v_b;
    return {v, in.eta * spare_a, (1.0 - in.eta) * spare_b};
}

GaussianMacRegion gaussian_mac_region(const GaussianMacInput &in) {
    const HshChannel ch = gaussian_mac_to_hsh(in);
    const RmaxResult r1 = rmax_individual(ch.v, ch.n_a);
    const RmaxResult r2 = rmax_individual(ch.v, ch.n_b);
    const RmaxResult r12 = rmax_sum(ch.v, ch.n_a, ch.n_b);
    RateRegion region(2, {r1.value.nats(), r2.value.nats(), r12.value.nats()});
    const bool large = r1.branch == 1 && r2.branch == 1 && r12.branch == 1;
    return {region, ch, {r1.branch, r2.branch, r12.branch}, large};
}

std::string_view objective_name(SearchObjective o) {
    switch (o) {
        case SearchObjective::area:
            return "area";
        case SearchObjective::r1:
            return "R1";
        case SearchObjective::r2:
            return "R2";
        case SearchObjective::weighted:
            return "weighted";
    }
    return "?";
}

SearchObjective parse_objective(std::string_view name) {
    for (SearchObjective o :
         {SearchObjective::area, SearchObjective::r1, SearchObjective::r2, SearchObjective::weighted}) {
        if (name == objective_name(o)) {
            return o;
        }
    }
    throw DomainError("unknown objective '" + std::string(name) + "' (expected area, R1, R2 or weighted)");
}

double objective_value(const RateRegion &region, SearchObjective objective, double weight) {
    switch (objective) {
        case SearchObjective::area:
            return area(region);
        case SearchObjective::r1:
            return region.bound(0b01);
        case SearchObjective::r2:
            return region.bound(0b10);
        case SearchObjective::weighted: {
            double best = 0.0;
            for (const RatePoint &p : two_user_vertices(region)) {
                best = std::max(best, weight * p[0] + (1.0 - weight) * p[1]);
            }
            return best;
        }
    }
    return 0.0;
}

namespace {

struct SearchSpace {
    double eta, nbar_a, nbar_b;
    bool pure_only;

    int dims() const {
        return pure_only ? 4 : 6;
    }
    double r_max(double nbar) const {
        return std::asinh(std::sqrt(nbar));
    }
    std::vector<double> lower() const {
        return std::vector<double>(static_cast<std::size_t>(dims()), 0.0);
    }
    std::vector<double> upper() const {
        std::vector<double> u{r_max(nbar_a), kTwoPi, r_max(nbar_b), kTwoPi};
        if (!pure_only) {
            u.push_back(nbar_a);
            u.push_back(nbar_b);
        }
        return u;
    }
    static bool periodic(int d) {
        return d == 1 || d == 3;
    }

    /// (2t + 1) times the squeezed-vacuum covariance; t = 0 is a pure state.
    static CovMatrix user_state(double r, double theta, double thermal) {
        return (2.0 * thermal + 1.0) * squeeze_covariance(SqueezeParams::from_polar(r, theta));
    }

    CovMatrix state_a(const std::vector<double> &x) const {
        return user_state(x[0], x[1], pure_only ? 0.0 : x[4]);
    }
    CovMatrix state_b(const std::vector<double> &x) const {
        return user_state(x[2], x[3], pure_only ? 0.0 : x[5]);
    }
};

}  // namespace

CovarianceSearchResult covariance_search(double eta, double nbar_a, double nbar_b,
                                         const CovarianceSearchOptions &options) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw DomainError("transmissivity must lie in [0, 1]");
    }
    require_budget(nbar_a, "nbar_A");
    require_budget(nbar_b, "nbar_B");
    if (options.grid < 2) {
        throw DomainError("search grid needs at least 2 points per dimension");
    }
    if (!(options.weight >= 0.0 && options.weight <= 1.0)) {
        throw DomainError("objective weight must lie in [0, 1]");
    }
    const SearchSpace space{eta, nbar_a, nbar_b, options.pure_only};
    const int dims = space.dims();
    const std::vector<double> lo = space.lower();
    const std::vector<double> hi = space.upper();

    std::int64_t evals = 0;
    auto evaluate = [&](const std::vector<double> &x) {
        ++evals;
        try {
            GaussianMacInput in(eta, space.state_a(x), space.state_b(x), nbar_a, nbar_b);
            return objective_value(gaussian_mac_region(in).region, options.objective, options.weight);
        } catch (const DomainError &) {
            // Infeasible: the state's own photons exceed the budget.
            return kNegInf;
        }
    };

    std::vector<double> best_x(static_cast<std::size_t>(dims), 0.0);
    double best = evaluate(best_x);  // vacuum inputs: the coherent-state region
    std::vector<SearchStep> trace{{best_x, best}};
    auto offer = [&](const std::vector<double> &x, double val) {
        if (val > best) {
            best = val;
            best_x = x;
            trace.push_back({x, val});
        }
    };

    // Coarse grid over every dimension, mixed-radix enumeration in fixed order.
    const int g = options.grid;
    std::int64_t total = 1;
    for (int d = 0; d < dims; ++d) {
        total *= g;
    }
    std::vector<double> x(static_cast<std::size_t>(dims));
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        for (int d = 0; d < dims; ++d) {
            const auto k = static_cast<double>(c % g);
            c /= g;
            const auto du = static_cast<std::size_t>(d);
            x[du] = SearchSpace::periodic(d) ? hi[du] * k / g : lo[du] + (hi[du] - lo[du]) * k / (g - 1);
        }
        offer(x, evaluate(x));
    }

    // Compass refinement from the grid optimum and from seeded random starts.
    auto refine = [&](std::vector<double> start) {
        double val = evaluate(start);
        std::vector<double> step(static_cast<std::size_t>(dims));
        for (int d = 0; d < dims; ++d) {
            const auto du = static_cast<std::size_t>(d);
            step[du] = (hi[du] - lo[du]) / g;
        }
        for (int it = 0; it < 4000; ++it) {
            bool moved = false;
            for (int d = 0; d < dims && !moved; ++d) {
                const auto du = static_cast<std::size_t>(d);
                for (double sign : {1.0, -1.0}) {
                    std::vector<double> y = start;
                    y[du] += sign * step[du];
                    y[du] = SearchSpace::periodic(d) ? wrap(y[du]) : std::clamp(y[du], lo[du], hi[du]);
                    const double v = evaluate(y);
                    if (v > val) {
                        val = v;
                        start = y;
                        moved = true;
                        break;
                    }
                }
            }
            if (!moved) {
                double largest = 0.0;
                for (double &s : step) {
                    s /= 2.0;
                    largest = std::max(largest, s);
                }
                if (largest < 1e-10) {
                    break;
                }
            }
        }
        offer(start, val);
    };

    refine(best_x);
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < options.restarts; ++k) {
        std::vector<double> start(static_cast<std::size_t>(dims));
        for (int d = 0; d < dims; ++d) {
            const auto du = static_cast<std::size_t>(d);
            start[du] = lo[du] + (hi[du] - lo[du]) * unit(rng);
        }
        refine(start);
    }

    GaussianMacInput in(eta, space.state_a(best_x), space.state_b(best_x), nbar_a, nbar_b);
    return {in.v_a, in.v_b, gaussian_mac_region(in).region, best, trace, evals};
}

}  // namespace bmac
