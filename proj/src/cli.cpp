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

#include "bosonic_mac/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <ostream>
#include <sstream>

#include "bosonic_mac/bounds.hpp"
#include "bosonic_mac/coherent_mac.hpp"
#include "bosonic_mac/errors.hpp"
#include "bosonic_mac/fock_oracle.hpp"
#include "bosonic_mac/hsh_gaussian.hpp"
#include "bosonic_mac/io.hpp"
#include "bosonic_mac/noise_channel.hpp"
#include "bosonic_mac/wideband.hpp"

namespace bmac::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Common {
    std::string unit = "nats";
    bool json = false;
    bool csv = false;
    std::string output;
    std::uint64_t seed = 0;
};

void add_common(CLI::App *sub, Common &c, bool with_seed) {
    sub->add_option("--unit", c.unit, "Information unit")->check(CLI::IsMember({"nats", "bits"}));
    auto *j = sub->add_flag("--json", c.json, "Emit JSON (default)");
    sub->add_flag("--csv", c.csv, "Emit CSV")->excludes(j);
    sub->add_option("--output,-o", c.output, "Output file (relative paths resolve against $BMAC_OUTPUT_DIR)");
    if (with_seed) {
        sub->add_option("--seed", c.seed, "Seed for stochastic steps");
    }
}

fs::path output_dir() {
    const char *env = std::getenv(kOutputDirEnv);
    return env && *env ? fs::path(env) : fs::path(".");
}

void emit(const Common &c, const std::string &content, std::ostream &out) {
    if (c.output.empty()) {
        out << content;
        return;
    }
    fs::path p(c.output);
    if (p.is_relative()) {
        p = output_dir() / p;
    }
    write_text(p, content);
}

Json header(std::string_view kind, Unit unit) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["kind"] = kind;
    j["unit"] = unit_name(unit);
    return j;
}

Json region_object(const RateRegion &r, Unit unit) {
    return Json::parse(region_json(r, unit));
}

std::string dump(const Json &j) {
    return j.dump(2) + "\n";
}

/// Two-user shorthand: a single eta means (eta, 1 - eta).
std::vector<double> expand_etas(std::vector<double> etas, std::size_t users) {
    if (etas.size() == 1 && users == 2) {
        etas.push_back(1.0 - etas[0]);
    }
    if (etas.size() != users) {
        throw DomainError("expected " + std::to_string(users) + " transmissivities, got " +
                          std::to_string(etas.size()));
    }
    return etas;
}

// ---- region ----

struct RegionArgs {
    Common c;
    int users = 0;
    std::vector<double> eta{0.5};
    std::vector<double> nbar{10.0, 8.0};
    std::string detection = "optimal";
    double noise = 0.0;
    bool extension = false;
    int samples = 201;
    std::int64_t simulate = 0;
};

int do_region(const RegionArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    const std::size_t users = a.users > 0 ? static_cast<std::size_t>(a.users) : a.nbar.size();
    if (a.nbar.size() != users) {
        throw DomainError("expected " + std::to_string(users) + " photon budgets, got " +
                          std::to_string(a.nbar.size()));
    }
    const MacModel m(expand_etas(a.eta, users), a.nbar);
    const Detection det = parse_detection(a.detection);
    RateRegion region = [&] {
        if (a.noise != 0.0) {
            if (det != Detection::optimal) {
                throw DomainError("--noise applies to optimal detection only");
            }
            return noisy_optimal_region(NoisyMacModel(m, a.noise));
        }
        return region_for(m, det, a.extension);
    }();
    if (a.c.csv) {
        emit(a.c, trace_csv(boundary_trace(region, a.samples), unit), out);
        return kExitOk;
    }
    Json j = header("region", unit);
    j["detection"] = detection_name(det);
    j["noise"] = a.noise;
    j["region"] = region_object(region, unit);
    if (a.simulate > 0) {
        const QuadratureEstimate q = simulate_quadrature(m, det, a.simulate, a.c.seed);
        Json mc;
        mc["samples"] = q.samples;
        mc["seed"] = a.c.seed;
        mc["low_sample_warning"] = q.low_sample_warning;
        Json est = Json::array();
        for (Subset s = 1; s <= full_set(q.num_users); ++s) {
            est.push_back({{"subset", members(s)}, {"estimate", in_unit(q.estimate(s), unit)}});
        }
        mc["estimates"] = est;
        j["monte_carlo"] = mc;
    }
    emit(a.c, dump(j), out);
    return kExitOk;
}

// ---- wideband ----

struct WidebandArgs {
    Common c;
    std::vector<double> eta{0.5};
    std::vector<double> power{1.0, 1.0};
    std::string hbar = "1";
    std::string detection = "homodyne";
    double delta = 0.0;
    std::string emit_allocation;
    int points = 400;
};

int do_wideband(const WidebandArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    const double hbar = a.hbar == "si" ? kHbarSI : 1.0;
    const WidebandModel w(expand_etas(a.eta, a.power.size()), a.power, hbar);
    const Detection det = parse_detection(a.detection);
    const Subset all = full_set(w.num_users());

    if (!a.emit_allocation.empty()) {
        SpectralAllocation alloc = SpectralAllocation::empty(hbar);
        if (a.emit_allocation == "sum") {
            alloc = wideband_allocation(w, all, det);
        } else {
            const Detection family = det == Detection::optimal ? Detection::optimal : Detection::homodyne;
            const CornerAllocations corner = corner_allocations(w, family);
            alloc = a.emit_allocation == "alice" ? corner.alice : corner.bob;
        }
        emit(a.c, pairs_csv("omega,nbar", alloc.sample(a.points)), out);
        return kExitOk;
    }
    const RateRegion region = wideband_region(w, det);
    if (a.c.csv) {
        emit(a.c, trace_csv(boundary_trace(region, 201), unit), out);
        return kExitOk;
    }
    Json j = header("wideband", unit);
    j["detection"] = detection_name(det);
    j["hbar"] = hbar;
    j["rate_unit"] = std::string(unit_name(unit)) + "/s";
    j["region"] = region_object(region, unit);
    if (w.num_users() == 2) {
        const Detection family = det == Detection::optimal ? Detection::optimal : Detection::homodyne;
        const CornerAllocations corner = corner_allocations(w, family);
        j["corner"] = {{"achieved", {in_unit(corner.achieved[0], unit), in_unit(corner.achieved[1], unit)}},
                       {"closed_form", {in_unit(corner.closed_form[0], unit), in_unit(corner.closed_form[1], unit)}},
                       {"nonnegativity_violations", corner.nonnegativity_violations},
                       {"single_user_fallback", corner.single_user_fallback}};
    }
    if (a.delta > 0.0) {
        const DiscretizedWaterfill d = discretized_waterfill(w, all, a.delta, det);
        j["discretized"] = {{"bin_width", a.delta},
                            {"bins", d.bins},
                            {"rate", in_unit(d.rate, unit)},
                            {"closed_form", region.bound(all)},
                            {"multiplier", d.multiplier},
                            {"iterations", d.iterations},
                            {"budget_residual", d.budget_residual}};
    }
    emit(a.c, dump(j), out);
    return kExitOk;
}

// ---- hsh ----

struct HshArgs {
    Common c;
    double v1 = 0.25, v2 = 0.25, v12 = 0.0;
    double na = 1.0, nb = 2.0;
    int brute_force = 0;
};

Json input_json(const InputCovChoice &in) {
    const CovMatrix v = in.covariance();
    return {{"r", in.r}, {"theta", in.theta}, {"budget", in.budget}, {"covariance", {v.v1(), v.v2(), v.v12()}}};
}

int do_hsh(const HshArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    const HshChannel ch(CovMatrix(a.v1, a.v2, a.v12), a.na, a.nb);
    const RateRegion region = hsh_region(ch);
    if (a.c.csv) {
        emit(a.c, trace_csv(boundary_trace(region, 201), unit), out);
        return kExitOk;
    }
    Json j = header("hsh", unit);
    j["region"] = region_object(region, unit);
    j["branches"] = {rmax_individual(ch.v, ch.n_a).branch, rmax_individual(ch.v, ch.n_b).branch,
                     rmax_sum(ch.v, ch.n_a, ch.n_b).branch};
    j["case"] = case_label(classify(ch));
    Json corners;
    for (Corner corner : {Corner::lower, Corner::upper}) {
        const CornerInputs in = corner_inputs(ch, corner);
        corners[corner == Corner::lower ? "lower" : "upper"] = {
            {"a", input_json(in.a)},
            {"b", input_json(in.b)},
            {"roles_swapped", in.roles_swapped},
            {"same_inputs_for_both_corners", in.same_inputs_for_both_corners}};
    }
    j["corners"] = corners;
    if (a.brute_force > 0) {
        Json bf = Json::array();
        for (RmaxTarget t : {RmaxTarget::r1, RmaxTarget::r2, RmaxTarget::sum}) {
            bf.push_back(brute_force_rmax(ch, t, a.brute_force).value.in(unit));
        }
        j["brute_force"] = bf;
    }
    emit(a.c, dump(j), out);
    return kExitOk;
}

// ---- gaussian-search ----

struct SearchArgs {
    Common c;
    double eta = 0.5;
    double nbar_a = 10.0, nbar_b = 8.0;
    std::string objective = "area";
    double weight = 0.5;
    int grid = 12;
    int restarts = 8;
    bool mixed = false;
};

int do_search(const SearchArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    CovarianceSearchOptions opt;
    opt.objective = parse_objective(a.objective);
    opt.weight = a.weight;
    opt.grid = a.grid;
    opt.restarts = a.restarts;
    opt.seed = a.c.seed;
    opt.pure_only = !a.mixed;
    const CovarianceSearchResult r = covariance_search(a.eta, a.nbar_a, a.nbar_b, opt);
    const RateRegion region = r.region;
    if (a.c.csv) {
        emit(a.c, trace_csv(boundary_trace(region, 201), unit), out);
        return kExitOk;
    }
    const GaussianMacRegion gm = gaussian_mac_region(GaussianMacInput(a.eta, r.v_a, r.v_b, a.nbar_a, a.nbar_b));
    Json j = header("gaussian-search", unit);
    j["objective"] = objective_name(opt.objective);
    // Area scales with the square of the unit factor; single rates scale linearly.
    const double scale = in_unit(1.0, unit);
    j["objective_value"] = opt.objective == SearchObjective::area ? r.objective * scale * scale : r.objective * scale;
    j["v_a"] = {r.v_a.v1(), r.v_a.v2(), r.v_a.v12()};
    j["v_b"] = {r.v_b.v1(), r.v_b.v2(), r.v_b.v12()};
    j["region"] = region_object(region, unit);
    j["branches"] = gm.branches;
    j["case"] = case_label(classify(gm.channel));
    j["evaluations"] = r.evaluations;
    j["seed"] = a.c.seed;
    emit(a.c, dump(j), out);
    return kExitOk;
}

// ---- noise-capacity ----

struct NoiseArgs {
    Common c;
    double eta = 0.5;
    double vb1 = 0.25, vb2 = 0.25, vb12 = 0.0;
    double nbar = 10.0;
};

int do_noise(const NoiseArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    const GaussianNoiseChannel ch(a.eta, CovMatrix(a.vb1, a.vb2, a.vb12));
    const CapacityResult r = capacity(ch, a.nbar);
    if (a.c.csv) {
        throw DomainError("noise-capacity emits JSON only");
    }
    Json j = header("noise-capacity", unit);
    j["capacity"] = r.capacity.in(unit);
    j["lower"] = r.lower.in(unit);
    j["upper"] = r.upper.in(unit);
    j["threshold"] = r.threshold;
    j["equivalent_thermal"] = equivalent_thermal(ch);
    j["validity"] = validity_name(r.validity);
    j["provenance"] = r.provenance;
    emit(a.c, dump(j), out);
    return kExitOk;
}

// ---- bounds ----

struct BoundsArgs {
    Common c;
    double eta = 0.5;
    double nbar_a = 10.0, nbar_b = 8.0;
    double sweep = 0.0;
};

int do_bounds(const BoundsArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    std::vector<RatioRow> rows;
    if (a.sweep > 0.0) {
        std::vector<double> grid;
        for (double n = 100.0; n <= a.sweep * (1.0 + 1e-12); n *= 10.0) {
            grid.push_back(n);
        }
        if (grid.empty()) {
            throw DomainError("--sweep must be at least 100");
        }
        rows = asymptotic_ratio(a.eta, grid);
    }
    if (a.c.csv) {
        if (!rows.empty()) {
            std::string csv = "nbar,z,rate,outer,ratio\n";
            for (const RatioRow &r : rows) {
                csv += format_number(r.nbar) + "," + format_number(r.z) + "," +
                       format_number(in_unit(r.rate, unit)) + "," + format_number(in_unit(r.outer, unit)) + "," +
                       format_number(r.ratio) + "\n";
            }
            emit(a.c, csv, out);
        } else {
            emit(a.c, trace_csv(boundary_trace(outer_bound_region(a.eta, a.nbar_a, a.nbar_b), 201), unit), out);
        }
        return kExitOk;
    }
    const OuterBoundReport r = outer_bounds(a.eta, a.nbar_a, a.nbar_b);
    Json j = header("bounds", unit);
    j["r1_outer"] = r.r1_outer.in(unit);
    j["r2_outer"] = r.r2_outer.in(unit);
    j["sum_outer"] = r.sum_outer.in(unit);
    j["sum_achieved_by"] = r.sum_achieved_by;
    j["region"] = region_object(outer_bound_region(a.eta, a.nbar_a, a.nbar_b), unit);
    if (!rows.empty()) {
        Json t = Json::array();
        for (const RatioRow &row : rows) {
            t.push_back({{"nbar", row.nbar},
                         {"z", row.z},
                         {"rate", in_unit(row.rate, unit)},
                         {"outer", in_unit(row.outer, unit)},
                         {"ratio", row.ratio}});
        }
        j["asymptotic_ratio"] = t;
    }
    emit(a.c, dump(j), out);
    return kExitOk;
}

// ---- oracle ----

struct OracleArgs {
    Common c;
    std::string check = "thermal";
    double nbar = 1.0;
    int k = 200;
    double eta = 0.5;
    double nbar_b = -1.0;
    int radial = 64;
};

int do_oracle(const OracleArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    auto u = [&](double x) { return format_number(in_unit(x, unit)); };
    std::string csv;
    if (a.check == "thermal") {
        const double numeric = thermal_entropy_numeric(a.nbar, a.k).nats();
        const double closed = g(a.nbar).nats();
        csv = "k,numeric,closed_form,difference\n" + std::to_string(a.k) + "," + u(numeric) + "," + u(closed) + "," +
              u(numeric - closed) + "\n";
    } else if (a.check == "modulated") {
        const double nb = a.nbar_b < 0.0 ? a.nbar : a.nbar_b;
        ModulationQuadrature quad;
        quad.radial_nodes = a.radial;
        const ModulatedAverage m = modulated_average(a.eta, a.nbar, nb, a.k, quad);
        const double closed = g(two_user_received_photons(a.eta, a.nbar, nb)).nats();
        csv = "k,numeric,closed_form,difference,off_diagonal\n" + std::to_string(a.k) + "," + u(m.entropy.nats()) +
              "," + u(closed) + "," + u(m.entropy.nats() - closed) + "," + format_number(m.off_diagonal_mass) + "\n";
    } else {
        std::vector<int> ks;
        for (int k = 10; k <= a.k; k *= 2) {
            ks.push_back(k);
        }
        if (ks.empty() || ks.back() != a.k) {
            ks.push_back(a.k);
        }
        csv = "k,entropy,gap,gap_bound\n";
        const double closed = g(a.nbar).nats();
        for (const TruncationRow &r : truncation_convergence(a.nbar, ks)) {
            csv += std::to_string(r.k) + "," + u(r.entropy) + "," + u(closed - r.entropy) + "," + u(r.gap_bound) + "\n";
        }
    }
    emit(a.c, csv, out);
    return kExitOk;
}

// ---- fig-dataset ----

struct FigArgs {
    Common c;
    std::string name;
    std::string out_dir;
    int samples = 201;
};

int do_fig(const FigArgs &a, std::ostream &out) {
    const Unit unit = parse_unit(a.c.unit);
    const fs::path dir = a.out_dir.empty() ? output_dir() : fs::path(a.out_dir);
    constexpr double eta = 0.5;
    constexpr double na = 10.0;
    constexpr double nb = 8.0;
    const MacModel m = MacModel::two_user(eta, na, nb);
    std::vector<std::pair<std::string, RateRegion>> traces;
    if (a.name == "fig2") {
        traces = {{"homodyne", homodyne_region(m)}, {"heterodyne", heterodyne_region(m)}, {"optimal", optimal_region(m)}};
    } else {
        const CovMatrix v(1.0 / 32.0, 2.0);
        traces = {{"heterodyne", heterodyne_region(m)},
                  {"coherent_optimal", optimal_region(m)},
                  {"gaussian", gaussian_mac_region(GaussianMacInput(eta, v, v, na, nb)).region},
                  {"outer", outer_bound_region(eta, na, nb)}};
    }
    Json j = header("fig-dataset", unit);
    j["name"] = a.name;
    j["parameters"] = {{"eta", eta}, {"nbar_a", na}, {"nbar_b", nb}};
    Json files = Json::array();
    for (const auto &[label, region] : traces) {
        const std::string file = a.name + "_" + label + ".csv";
        write_text(dir / file, trace_csv(boundary_trace(region, a.samples), unit));
        files.push_back({{"trace", label}, {"file", file}, {"region", region_object(region, unit)}});
    }
    j["directory"] = dir.string();
    j["files"] = files;
    out << dump(j);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Capacity regions of Bosonic multiple-access channels", "bmac"};
    app.require_subcommand(1);

    RegionArgs region;
    auto *s_region = app.add_subcommand("region", "Coherent-state MAC capacity region");
    add_common(s_region, region.c, true);
    s_region->add_option("--users", region.users, "Number of users (defaults to the --nbar count)");
    s_region->add_option("--eta", region.eta, "Transmissivities (one value means eta, 1 - eta)");
    s_region->add_option("--nbar", region.nbar, "Mean photon budgets");
    s_region->add_option("--detection", region.detection)->check(CLI::IsMember({"homodyne", "heterodyne", "optimal"}));
    s_region->add_option("--noise", region.noise, "Additive classical noise photons (optimal detection)");
    s_region->add_flag("--extension", region.extension, "Allow the m-user joint-measurement extension");
    s_region->add_option("--samples", region.samples, "Boundary trace points");
    s_region->add_option("--simulate", region.simulate, "Monte Carlo samples for a quadrature cross-check");

    WidebandArgs wb;
    auto *s_wb = app.add_subcommand("wideband", "Frequency-multiplexed MAC with power budgets");
    add_common(s_wb, wb.c, false);
    s_wb->add_option("--eta", wb.eta, "Transmissivities (one value means eta, 1 - eta)");
    s_wb->add_option("--power", wb.power, "Average powers");
    s_wb->add_option("--hbar", wb.hbar, "Natural units (1) or SI")->check(CLI::IsMember({"1", "si"}));
    s_wb->add_option("--detection", wb.detection)->check(CLI::IsMember({"homodyne", "heterodyne", "optimal"}));
    s_wb->add_option("--delta", wb.delta, "Bin width of the discretized water-filling check");
    s_wb->add_option("--emit-allocation", wb.emit_allocation, "Emit an allocation as omega,nbar CSV")
        ->check(CLI::IsMember({"alice", "bob", "sum"}));
    s_wb->add_option("--points", wb.points, "Frequency samples for --emit-allocation");

    HshArgs hsh;
    auto *s_hsh = app.add_subcommand("hsh", "HSH channel region, branches and corner inputs");
    add_common(s_hsh, hsh.c, false);
    s_hsh->add_option("--v1", hsh.v1);
    s_hsh->add_option("--v2", hsh.v2);
    s_hsh->add_option("--v12", hsh.v12);
    s_hsh->add_option("--na", hsh.na);
    s_hsh->add_option("--nb", hsh.nb);
    s_hsh->add_option("--brute-force", hsh.brute_force, "Grid size for a brute-force cross-check");

    SearchArgs search;
    auto *s_search = app.add_subcommand("gaussian-search", "Search Gaussian input covariances");
    add_common(s_search, search.c, true);
    s_search->add_option("--eta", search.eta);
    s_search->add_option("--nbar-a", search.nbar_a);
    s_search->add_option("--nbar-b", search.nbar_b);
    s_search->add_option("--objective", search.objective)->check(CLI::IsMember({"area", "R1", "R2", "weighted"}));
    s_search->add_option("--weight", search.weight, "Weight on R1 for the weighted objective");
    s_search->add_option("--grid", search.grid, "Coarse grid points per dimension");
    s_search->add_option("--restarts", search.restarts);
    s_search->add_flag("--mixed", search.mixed, "Also search thermal (mixed) inputs");

    NoiseArgs noise;
    auto *s_noise = app.add_subcommand("noise-capacity", "Capacity of the anisotropic Gaussian-noise channel");
    add_common(s_noise, noise.c, false);
    s_noise->add_option("--eta", noise.eta);
    s_noise->add_option("--vb1", noise.vb1);
    s_noise->add_option("--vb2", noise.vb2);
    s_noise->add_option("--vb12", noise.vb12);
    s_noise->add_option("--nbar", noise.nbar);

    BoundsArgs bounds;
    auto *s_bounds = app.add_subcommand("bounds", "Outer bounds and squeezed homodyne achievability");
    add_common(s_bounds, bounds.c, false);
    s_bounds->add_option("--eta", bounds.eta);
    s_bounds->add_option("--nbar-a", bounds.nbar_a);
    s_bounds->add_option("--nbar-b", bounds.nbar_b);
    s_bounds->add_option("--sweep", bounds.sweep, "Largest nbar of the decade sweep 1e2 .. max");

    OracleArgs oracle;
    auto *s_oracle = app.add_subcommand("oracle", "Fock-basis numerical checks (CSV)");
    add_common(s_oracle, oracle.c, false);
    s_oracle->add_option("--check", oracle.check)->check(CLI::IsMember({"thermal", "modulated", "truncation"}));
    s_oracle->add_option("--nbar", oracle.nbar);
    s_oracle->add_option("--k", oracle.k, "Photon-number truncation");
    s_oracle->add_option("--eta", oracle.eta);
    s_oracle->add_option("--nbar-b", oracle.nbar_b, "Second user's budget (defaults to --nbar)");
    s_oracle->add_option("--radial", oracle.radial, "Gauss-Laguerre nodes");

    FigArgs fig;
    auto *s_fig = app.add_subcommand("fig-dataset", "Write the figure trace bundles");
    s_fig->add_option("name", fig.name)->required()->check(CLI::IsMember({"fig2", "fig4"}));
    s_fig->add_option("--unit", fig.c.unit)->check(CLI::IsMember({"nats", "bits"}));
    s_fig->add_option("--out-dir", fig.out_dir, "Directory (defaults to $BMAC_OUTPUT_DIR or .)");
    s_fig->add_option("--samples", fig.samples, "Points per trace");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitDomain;
    }

    try {
        if (s_region->parsed()) return do_region(region, out);
        if (s_wb->parsed()) return do_wideband(wb, out);
        if (s_hsh->parsed()) return do_hsh(hsh, out);
        if (s_search->parsed()) return do_search(search, out);
        if (s_noise->parsed()) return do_noise(noise, out);
        if (s_bounds->parsed()) return do_bounds(bounds, out);
        if (s_oracle->parsed()) return do_oracle(oracle, out);
        if (s_fig->parsed()) return do_fig(fig, out);
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NumericError &e) {
        err << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitDomain;
}

}  // namespace bmac::cli
