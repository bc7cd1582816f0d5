#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monkbench/ba/carrier.hpp"
#include "monkbench/errors.hpp"
#include "monkbench/forcing/amalgam.hpp"
#include "monkbench/forcing/json.hpp"
#include "monkbench/harness/cli.hpp"
#include "monkbench/harness/harness.hpp"
#include "monkbench/interval/cut.hpp"

namespace py = pybind11;
using namespace monkbench;

// JSON crosses the boundary as text; the Python side parses it.
PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "MonkbenchError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("suite_names", &suite_names);
  m.def("case_seed", &case_seed, py::arg("suite"), py::arg("seed"), py::arg("index"));
  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed, std::size_t count, const std::string& bounds,
         std::size_t threads) {
        SuiteConfig cfg{suite, seed, count, SuiteBounds::parse(bounds), threads};
        py::gil_scoped_release release;
        return run_suite(cfg).to_json().dump();
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("count") = 0, py::arg("bounds") = "", py::arg("threads") = 1);
  m.def("pi_density", [](const std::string& presentation) {
    return pi_density(full_algebra(presentation_from_json(Json::parse(presentation))));
  });
  m.def("amalgam_run", [](const std::string& instance) {
    AmalgamInstance inst = amalgam_instance_from_json(Json::parse(instance));
    return amalgam_result_to_json(m_amalgam(inst), inst).dump();
  });
  m.def("pichi_order", [](const std::string& order) { return pichi_order(LinOrder::parse(order)).to_string(); });
  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
