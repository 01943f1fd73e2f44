#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skein/braid.hpp"
#include "skein/cli.hpp"
#include "skein/colored.hpp"
#include "skein/errors.hpp"
#include "skein/harness.hpp"
#include "skein/hecke.hpp"
#include "skein/oracles.hpp"
#include "skein/special.hpp"

namespace py = pybind11;
using namespace skein;

namespace {

// Everything crosses the boundary as JSON text; the Python side decodes it.
BraidWord braid_of(const std::string& text) {
  if (auto b = named_braid(text)) return *b;
  BraidWord b = parse_braid(text);
  b.validate();
  return b;
}

std::vector<Partition> partitions_of(const std::vector<std::vector<int>>& colors) {
  std::vector<Partition> out;
  for (const auto& c : colors) out.emplace_back(c);
  return out;
}

std::string homfly(const std::string& braid) {
  const Scalar h = markov_eval(hecke_from_braid(braid_of(braid)));
  nlohmann::json j{{"value", h.to_json()}, {"text", h.str()}};
  auto d = h.fdeg();
  j["fdeg"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
  return j.dump();
}

std::string colored(const std::string& braid, const std::vector<std::vector<int>>& colors, int cut) {
  const ColoredLink cl = make_colored(braid_of(braid), partitions_of(colors));
  const Scalar h = cut < 0 ? colored_homfly(cl) : reduced_colored_homfly(cl, cut);
  nlohmann::json j{{"value", h.to_json()}, {"text", h.str()}, {"cable_fdeg", cl.cable_fdeg()}};
  auto d = h.fdeg();
  j["fdeg"] = d ? nlohmann::json(*d) : nlohmann::json(nullptr);
  return j.dump();
}

std::string kashaev_json(const std::string& braid, int N, int bits) {
  const LinkPresentation L = analyze_closure(braid_of(braid));
  const QFraction f = kashaev_fraction(L, N);
  return nlohmann::json{{"fraction", f.to_json()}, {"text", f.str()}, {"value", eval_root(f, N, false, bits).to_json()}}
      .dump();
}

std::string msl(const std::string& braid, int m, const std::vector<int>& colors, int cut) {
  return m_invariant(analyze_closure(braid_of(braid)), m, colors, cut).to_json().dump();
}

std::string lg(const std::string& braid, int m, int a) {
  const QFraction v = links_gould(analyze_closure(braid_of(braid)), m, a);
  return nlohmann::json{{"value", v.to_json()}, {"text", v.str()}}.dump();
}

std::string alexander(const std::string& braid) {
  const LinkPresentation L = analyze_closure(braid_of(braid));
  if (L.num_components() == 1) return alexander_knot(L.braid).to_json().dump();
  return multivariable_alexander(L).to_json().dump();
}

std::string verify(const std::string& suite, int bits) { return run_suite(suite, bits).to_json().dump(); }

std::string closure(const std::string& braid) { return analyze_closure(braid_of(braid)).to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_skein, m) {
  m.doc() = "Colored HOMFLY-PT engine";

  static py::exception<SkeinError> error(m, "SkeinError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SkeinError& e) {
      PyErr_SetString(error.ptr(), (std::string(kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("DEFAULT_BITS") = kDefaultBits;
  m.def("format_braid", [](const std::string& b) { return format_braid(braid_of(b)); }, py::arg("braid"));
  m.def("closure", &closure, py::arg("braid"));
  m.def("homfly", &homfly, py::arg("braid"));
  m.def("colored", &colored, py::arg("braid"), py::arg("colors"), py::arg("cut") = -1);
  m.def("kashaev", &kashaev_json, py::arg("braid"), py::arg("N"), py::arg("bits") = kDefaultBits);
  m.def("m_invariant", &msl, py::arg("braid"), py::arg("m"), py::arg("colors"), py::arg("cut") = 0);
  m.def("links_gould", &lg, py::arg("braid"), py::arg("m"), py::arg("a"));
  m.def("alexander", &alexander, py::arg("braid"));
  m.def("suite_names", &suite_names);
  m.def("verify", &verify, py::arg("suite"), py::arg("bits") = kDefaultBits,
        py::call_guard<py::gil_scoped_release>());
  m.def("cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "skein");
    return cli::run(args);
  });
}
