#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetralab/codes.hpp"
#include "tetralab/correspondence.hpp"
#include "tetralab/error.hpp"
#include "tetralab/fourcube.hpp"
#include "tetralab/hypercube.hpp"
#include "tetralab/lattice.hpp"
#include "tetralab/report.hpp"

namespace py = pybind11;
using namespace tetralab;

namespace {

std::vector<std::string> run_json(const std::string& id, const std::string& size, unsigned threads,
                                  const std::string& reading, const std::string& method) {
  CheckOptions o;
  o.size = TorusLattice::parse(size).sizes();
  o.threads = threads;
  if (reading == "value")
    o.a_reading = AReading::FixedValue;
  else if (reading != "direction")
    throw UsageError("a_reading must be direction or value");
  o.method = method;
  std::vector<std::string> out;
  py::gil_scoped_release release;
  for (const auto& r : run_check(id, o)) out.push_back(r.to_json().dump());
  return out;
}

}  // namespace

PYBIND11_MODULE(_tetralab, m) {
  m.doc() = "native core of tetralab";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);

  m.def("check_ids", &check_ids);
  m.def("run_check_json", &run_json, py::arg("check"), py::arg("size") = "2x2x2", py::arg("threads") = 0,
        py::arg("a_reading") = "direction", py::arg("method") = "all");
  m.def("orientation", [](const std::string& g, const std::string& f) {
    return orientation(FaceWord::parse(g), FaceWord::parse(f)) == Orientation::Incoming ? "incoming" : "outgoing";
  });
  m.def("enumerate_faces", [](int N, int k) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_faces(N, k)) out.push_back(f.str());
    return out;
  });
  m.def("ising_R_pairs", [] {
    const auto R = ising_R();
    auto text = [&](std::uint64_t flat) {
      std::string s;
      for (auto c : R.unflatten(flat)) s += R.colors().name(c);
      return s;
    };
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [i, outs] : R.relation())
      for (auto o : outs) out.emplace_back(text(i), text(o));
    return out;
  });
  m.def("tables_star", &render_tables_star);
  m.def("z_spin_json", [](const std::string& size) { return laurent_json(z_spin(TorusLattice::parse(size))).dump(); });
  m.def("is_induced_cycle", [](const std::vector<std::string>& words) { return is_induced_cycle(WordSet::parse(words)); });
  m.def("min_distance", [](const std::vector<std::string>& words) { return min_distance(WordSet::parse(words)); });
}
