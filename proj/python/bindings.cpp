#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contra/jobs.hpp"

namespace py = pybind11;
using contra::json;

namespace {

std::pair<int, std::string> run(const std::string& command, const std::string& inputs,
                                 std::optional<std::string> field, std::uint64_t seed, std::size_t samples,
                                 std::uint32_t p, long lambda, unsigned mmax) {
  contra::JobSpec job;
  job.command = command;
  job.seed = seed;
  job.samples = samples;
  job.p = p;
  job.lambda = lambda;
  job.mmax = mmax;
  contra::JobResult result;
  try {
    if (field) job.field = contra::Field::parse(*field);
    const json parsed = json::parse(inputs);
    for (const auto& [role, value] : parsed.items()) job.inputs[role] = value;
    py::gil_scoped_release release;
    result = contra::run_job(job);
  } catch (const std::exception& e) {
    result.exit_code = 2;
    result.report = {{"command", command}, {"exit_code", 2}, {"error", {{"pointer", ""}, {"message", e.what()}}}};
  }
  return {result.exit_code, result.report.dump()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact coalgebra, comodule and contramodule computations";
  m.def("run_job", &run, py::arg("command"), py::arg("inputs"), py::arg("field") = std::nullopt,
        py::arg("seed") = contra::kDefaultSeed, py::arg("samples") = 8, py::arg("p") = 2, py::arg("lam") = 0,
        py::arg("mmax") = 3);
  m.def(
      "character",
      [](const std::string& name) { return contra::character(contra::catalog_rational(name)); },
      "Weight multiplicities of an SL2 catalog module at p = 2");
  m.def(
      "f_multiplicity",
      [](long lambda, const std::string& name) {
        return contra::f_multiplicity(lambda, contra::catalog_rational(name));
      },
      "Composition multiplicity of L(lambda) in a catalog module");
  m.def(
      "coalgebra_dim",
      [](const std::string& name, const std::string& field) {
        return contra::catalog_coalgebra(name, contra::Field::parse(field))->dim;
      },
      py::arg("name"), py::arg("field") = "Q");
  m.attr("DEFAULT_SEED") = contra::kDefaultSeed;
}
