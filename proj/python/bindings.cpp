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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <sstream>
#include <tuple>

#include "bosonic_mac/bounds.hpp"
#include "bosonic_mac/cli.hpp"
#include "bosonic_mac/coherent_mac.hpp"
#include "bosonic_mac/errors.hpp"
#include "bosonic_mac/fock_oracle.hpp"
#include "bosonic_mac/hsh_gaussian.hpp"
#include "bosonic_mac/io.hpp"
#include "bosonic_mac/noise_channel.hpp"

namespace py = pybind11;
using namespace bmac;

namespace {

using Cov = std::array<double, 3>;

CovMatrix cov(const Cov &v) {
    return {v[0], v[1], v[2]};
}

Subset subset_of(const std::vector<int> &users) {
    Subset s = 0;
    for (int u : users) {
        if (u < 1 || u > 30) {
            throw DomainError("user index " + std::to_string(u) + " out of range");
        }
        s |= singleton(u);
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Capacity regions of Bosonic multiple-access channels. All rates are in nats.";

    // Registered base first: pybind11 tries the most recent translator first.
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnphysicalStateError>(m, "UnphysicalStateError", domain.ptr());
    py::register_exception<FeasibilityError>(m, "FeasibilityError", domain.ptr());
    py::register_exception<TruncationError>(m, "TruncationError", domain.ptr());
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

    m.def("g", [](double x) { return g(x).nats(); }, py::arg("x"), "(x+1) ln(x+1) - x ln x.");
    m.def(
        "gaussian_entropy", [](const Cov &v) { return gaussian_entropy(cov(v)).nats(); }, py::arg("v"),
        "Entropy of a single-mode Gaussian state with covariance (V1, V2, V12).");

    py::class_<RateRegion>(m, "RateRegion")
        .def_property_readonly("num_users", &RateRegion::num_users)
        .def_property_readonly("bounds", &RateRegion::bounds, "Bounds indexed by subset bitmask minus one.")
        .def_property_readonly("annotation", &RateRegion::annotation)
        .def(
            "bound", [](const RateRegion &r, const std::vector<int> &users) { return r.bound(subset_of(users)); },
            py::arg("users"), "Bound on the sum rate of the given 1-based users.")
        .def(
            "contains",
            [](const RateRegion &r, const std::vector<double> &p, double tol) { return r.contains(RatePoint(p), tol); },
            py::arg("point"), py::arg("tolerance") = kContainsTolerance)
        .def("vertices",
             [](const RateRegion &r) {
                 std::vector<std::pair<double, double>> out;
                 for (const RatePoint &p : two_user_vertices(r)) {
                     out.emplace_back(p[0], p[1]);
                 }
                 return out;
             })
        .def("area", [](const RateRegion &r) { return area(r); })
        .def(
            "to_json", [](const RateRegion &r, const std::string &unit) { return region_json(r, parse_unit(unit)); },
            py::arg("unit") = "nats")
        .def("__repr__", [](const RateRegion &r) { return "<RateRegion " + region_json(r, Unit::nats, false) + ">"; });

    m.def(
        "homodyne_region",
        [](const std::vector<double> &eta, const std::vector<double> &nbar) { return homodyne_region(MacModel(eta, nbar)); },
        py::arg("eta"), py::arg("nbar"));
    m.def(
        "heterodyne_region",
        [](const std::vector<double> &eta, const std::vector<double> &nbar) {
            return heterodyne_region(MacModel(eta, nbar));
        },
        py::arg("eta"), py::arg("nbar"));
    m.def(
        "optimal_region",
        [](const std::vector<double> &eta, const std::vector<double> &nbar, bool extension) {
            return optimal_region(MacModel(eta, nbar), extension);
        },
        py::arg("eta"), py::arg("nbar"), py::arg("extension") = false);
    m.def(
        "outer_bound_region", &outer_bound_region, py::arg("eta"), py::arg("nbar_a"), py::arg("nbar_b"),
        "Outer bounds as a region, individual bounds tightened to the sum bound.");

    m.def(
        "rmax_individual",
        [](const Cov &v, double n) {
            const RmaxResult r = rmax_individual(cov(v), n);
            return std::make_tuple(r.value.nats(), r.branch);
        },
        py::arg("v"), py::arg("budget"), "(rate, branch) for the best modulation of trace `budget`.");
    m.def(
        "hsh_region", [](const Cov &v, double na, double nb) { return hsh_region(HshChannel(cov(v), na, nb)); },
        py::arg("v"), py::arg("n_a"), py::arg("n_b"));
    m.def(
        "gaussian_mac_region",
        [](double eta, const Cov &va, const Cov &vb, double na, double nb) {
            return gaussian_mac_region(GaussianMacInput(eta, cov(va), cov(vb), na, nb)).region;
        },
        py::arg("eta"), py::arg("v_a"), py::arg("v_b"), py::arg("nbar_a"), py::arg("nbar_b"));

    m.def(
        "noise_capacity",
        [](double eta, const Cov &vb, double nbar) {
            const GaussianNoiseChannel ch(eta, cov(vb));
            const CapacityResult c = capacity(ch, nbar);
            py::dict d;
            d["capacity"] = c.capacity.nats();
            d["lower"] = c.lower.nats();
            d["upper"] = c.upper.nats();
            d["threshold"] = c.threshold;
            d["equivalent_thermal"] = equivalent_thermal(ch);
            d["validity"] = std::string(validity_name(c.validity));
            d["provenance"] = c.provenance;
            return d;
        },
        py::arg("eta"), py::arg("vb"), py::arg("nbar"));

    m.def(
        "squeezed_homodyne_rate",
        [](double eta, double na, double nb, double z) { return squeezed_homodyne_rate(eta, na, nb, z).nats(); },
        py::arg("eta"), py::arg("nbar_a"), py::arg("nbar_b"), py::arg("z"));
    m.def("optimal_squeeze", &optimal_squeeze, py::arg("nbar_a"));

    m.def(
        "thermal_entropy_numeric", [](double nbar, int k) { return thermal_entropy_numeric(nbar, k).nats(); },
        py::arg("nbar"), py::arg("k"));
    m.def(
        "modulated_average_entropy",
        [](double eta, double na, double nb, int k, int radial) {
            return modulated_average_entropy(eta, na, nb, k, radial).nats();
        },
        py::arg("eta"), py::arg("nbar_a"), py::arg("nbar_b"), py::arg("k"), py::arg("radial_nodes") = 64);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out;
            std::ostringstream err;
            int code;
            {
                py::gil_scoped_release release;
                code = cli::run(args, out, err);
            }
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a bmac subcommand in-process; returns (exit_code, stdout, stderr).");
}
