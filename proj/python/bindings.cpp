#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nuframe/bounds.hpp"
#include "nuframe/cli.hpp"
#include "nuframe/errors.hpp"
#include "nuframe/fixtures.hpp"
#include "nuframe/gamma.hpp"
#include "nuframe/io.hpp"
#include "nuframe/perturb.hpp"

namespace py = pybind11;
using namespace nuframe;

namespace {

std::string dump(const io::Json& j) { return j.dump(); }

io::Json parse(const std::string& text) {
  try {
    return io::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput, e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matrix-valued frames of non-uniform shifts: core bindings";
  m.attr("__version__") = cli::version();

  static py::exception<Error> err(m, "NuframeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(err.ptr(), py::make_tuple(std::string(e.what()), std::string(error_code_name(e.code()))).ptr());
    }
  });

  py::class_<SpectralLattice>(m, "SpectralLattice")
      .def(py::init<int, int>(), py::arg("N"), py::arg("r"))
      .def_property_readonly("N", &SpectralLattice::N)
      .def_property_readonly("r", &SpectralLattice::r)
      .def_property_readonly("base_width", &SpectralLattice::base_width)
      .def("__eq__", [](const SpectralLattice& a, const SpectralLattice& b) { return a == b; })
      .def("__repr__", [](const SpectralLattice& L) {
        return "SpectralLattice(N=" + std::to_string(L.N()) + ", r=" + std::to_string(L.r()) + ")";
      });

  py::class_<MatrixSeq>(m, "MatrixSeq")
      .def(py::init([](const SpectralLattice& L, int n, const std::vector<std::tuple<int, std::int64_t, CMatrix>>& e) {
             MatrixSeq f(L, n);
             for (const auto& [s, l, mat] : e) f.accumulate({s, l}, mat);
             return f;
           }),
           py::arg("lattice"), py::arg("n"), py::arg("entries"),
           "entries: list of (s, l, n x n complex matrix)")
      .def_static("from_json", [](const std::string& t) { return io::matrix_seq_from_json(parse(t)); })
      .def("to_json", [](const MatrixSeq& f) { return dump(io::to_json(f)); })
      .def_property_readonly("lattice", &MatrixSeq::lattice)
      .def_property_readonly("n", &MatrixSeq::n)
      .def("entries", [](const MatrixSeq& f) {
        std::vector<std::tuple<int, std::int64_t, CMatrix>> out;
        for (const auto& [p, mat] : f.entries()) out.emplace_back(p.s, p.l, mat);
        return out;
      })
      .def("norm_squared", &MatrixSeq::norm_squared)
      .def("fourier", [](const MatrixSeq& f, double x) { return fourier_eval(f, x); }, py::arg("x"))
      .def("displace", [](const MatrixSeq& f, int s, std::int64_t l) { return displace(f, {s, l}); })
      .def("__eq__", [](const MatrixSeq& a, const MatrixSeq& b) { return a == b; });

  py::class_<SpectrumStep>(m, "SpectrumStep")
      .def(py::init<SpectralLattice, int, int, std::vector<CMatrix>>(), py::arg("lattice"), py::arg("n"),
           py::arg("refinement"), py::arg("cells"))
      .def_static("from_json", [](const std::string& t) { return io::spectrum_step_from_json(parse(t)); })
      .def("to_json", [](const SpectrumStep& S) { return dump(io::to_json(S)); })
      .def_property_readonly("refinement", &SpectrumStep::refinement)
      .def("eval", &SpectrumStep::eval, py::arg("x"))
      .def("norm_squared", &SpectrumStep::norm_squared)
      .def("__eq__", [](const SpectrumStep& a, const SpectrumStep& b) { return a == b; });

  py::class_<FrameSystem>(m, "FrameSystem")
      .def(py::init<std::vector<MatrixSeq>>(), py::arg("envelopes"))
      .def(py::init<std::vector<SpectrumStep>>(), py::arg("envelopes"))
      .def_static("from_json", [](const std::string& t) { return io::frame_system_from_json(parse(t)); })
      .def("to_json", [](const FrameSystem& s) { return dump(io::to_json(s)); })
      .def_property_readonly("lattice", &FrameSystem::lattice)
      .def_property_readonly("n", &FrameSystem::n)
      .def_property_readonly("p", &FrameSystem::p)
      .def_property_readonly("is_spectral", &FrameSystem::is_spectral)
      .def("__eq__", [](const FrameSystem& a, const FrameSystem& b) { return a == b; });

  m.def("fixture_json", [](const std::string& name) { return dump(io::to_json(cli::fixture_document(name))); },
        "System document for a named fixture, with companions");
  m.def("fixture_names", &fixtures::names);
  m.def("exam1", &fixtures::exam1);
  m.def("exam1_perturbed", &fixtures::exam1_perturbed);
  m.def("onb_fixture", &fixtures::onb_fixture);
  m.def("counterexample", [](int N, int r, double a0) {
    auto c = fixtures::counterexample(N, r, a0);
    return py::make_tuple(c.system, c.test_spectrum);
  });

  m.def("frame_sum", &frame_sum, py::arg("system"), py::arg("f"));
  m.def("frame_sum_spectral", &frame_sum_spectral, py::arg("system"), py::arg("F"));
  m.def("envelope_sup_norm", [](const FrameSystem& s, int grid) { return envelope_sup_norm(s, grid).value; },
        py::arg("system"), py::arg("grid") = 1024);
  m.def("bessel_sufficient_bound", &bessel_sufficient_bound, py::arg("p"), py::arg("n"), py::arg("b_sup"));
  m.def("feasibility", &feasibility, py::arg("p"), py::arg("n"), py::arg("N"));
  m.def("phase_vector", &phase_vector, py::arg("lattice"), py::arg("x"));
  m.def("gamma_matrix", &gamma_matrix, py::arg("system"), py::arg("m"), py::arg("k"), py::arg("x"));
  m.def("gamma_gram", &gamma_gram, py::arg("system"), py::arg("m"), py::arg("k"), py::arg("m2"), py::arg("k2"),
        py::arg("x"));
  m.def("stacked_operator", &stacked_operator, py::arg("system"), py::arg("x"));
  m.def("singular_values", &singular_values, py::arg("A"));
  m.def("identity_residual", &identity_residual, py::arg("system"), py::arg("f"), py::arg("nodes") = 128);
  m.def(
      "frame_bounds_json",
      [](const FrameSystem& s, int grid, int refine, unsigned threads) {
        py::gil_scoped_release release;
        return dump(io::to_json(frame_bounds_gamma_refined(s, grid, refine, threads)));
      },
      py::arg("system"), py::arg("grid") = 1024, py::arg("refine") = 0, py::arg("threads") = 0);
  m.def(
      "perturb_json",
      [](const FrameSystem& f, const FrameSystem& g, const std::string& mode, double a0, double b0, int grid) {
        py::gil_scoped_release release;
        if (mode == "absolute") return dump(io::to_json(check_absolute(f, g, a0, b0, grid)));
        if (mode == "relative") return dump(io::to_json(check_relative(f, g, a0, b0, grid)));
        throw Error(ErrorCode::InvalidInput, "mode must be absolute or relative");
      },
      py::arg("F"), py::arg("G"), py::arg("mode") = "absolute", py::arg("a0"), py::arg("b0"), py::arg("grid") = 4096);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"nuframe"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, errs;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, errs);
        return py::make_tuple(code, out.str(), errs.str());
      },
      py::arg("args"), "Runs the command-line front end in-process; returns (exit_code, stdout, stderr)");
}
