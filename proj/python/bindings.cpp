// Copyright 2026 The dysonsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "dysonsim/cli/harness.hpp"
#include "dysonsim/core/error.hpp"
#include "dysonsim/resources/resources.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

py::dict estimate_dict(const dysonsim::ResourceEstimate& e) {
  py::dict d;
  d["picture"] = e.picture;
  d["alpha_A"] = e.alpha_A;
  d["alpha_B"] = e.alpha_B;
  d["t"] = e.t;
  d["eps"] = e.eps;
  d["L"] = e.L;
  d["K"] = e.K;
  d["M"] = e.M;
  d["tau"] = e.tau;
  d["beta"] = e.beta;
  d["queries_ham_t"] = e.queries_ham_t;
  d["queries_eA"] = e.queries_eA;
  d["qubits"] = e.qubits;
  d["bound_backed"] = e.bound_backed;
  d["bound_source"] = e.bound_source;
  d["notes"] = e.notes;
  if (e.achieved_error) d["achieved_error"] = *e.achieved_error;
  return d;
}

py::list estimate_list(const std::vector<dysonsim::ResourceEstimate>& rows) {
  py::list out;
  for (const auto& e : rows) out.append(estimate_dict(e));
  return out;
}

dysonsim::BuiltModel build(const std::string& model_json) {
  return dysonsim::build_model(dysonsim::parse_model(json::parse(model_json)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Block-encoding and truncated Dyson series Hamiltonian simulation";

  // Translators registered later are tried first, so the base class goes first.
  auto base = py::register_exception<dysonsim::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<dysonsim::BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<dysonsim::InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<dysonsim::IoError>(m, "IoError", base.ptr());

  m.def(
      "estimate",
      [](const std::string& model_json, double t, double eps) {
        return estimate_list(dysonsim::estimate_model(build(model_json), t, eps));
      },
      py::arg("model_json"), py::arg("t"), py::arg("eps"));

  m.def(
      "sweep",
      [](const std::string& model_json, const std::string& param,
         const std::vector<double>& values, double t, double eps) {
        const auto spec = dysonsim::parse_model(json::parse(model_json));
        return estimate_list(dysonsim::sweep_model(spec, param, values, t, eps));
      },
      py::arg("model_json"), py::arg("param"), py::arg("values"), py::arg("t"), py::arg("eps"));

  m.def(
      "simulate",
      [](const std::string& model_json, double t, double eps, const std::string& picture,
         const std::string& backend) {
        dysonsim::SimulateOptions opts;
        opts.picture = picture;
        opts.backend = backend;
        const auto model = build(model_json);
        py::gil_scoped_release release;
        return dysonsim::simulate_model(model, t, eps, opts).report.dump();
      },
      py::arg("model_json"), py::arg("t"), py::arg("eps"), py::arg("picture") = "schrodinger",
      py::arg("backend") = "automatic");

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed,
         const std::map<std::string, double>& tolerances) {
        py::gil_scoped_release release;
        return dysonsim::run_verify(suite, seed, tolerances).summary.dump();
      },
      py::arg("suite") = "all", py::arg("seed") = 0,
      py::arg("tolerances") = std::map<std::string, double>{});

  m.def("estimate_csv_columns", &dysonsim::estimate_csv_columns);
  m.def("verify_suites", &dysonsim::verify_suites);
  m.def("sweep_parameters", &dysonsim::sweep_parameters);
}
