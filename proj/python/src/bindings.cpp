#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gasket/certificate.hpp"

namespace py = pybind11;
using namespace gasket;

namespace {

CoreSpec spec_from(const std::string& text) {
  if (text.rfind("bundled:", 0) == 0) return bundled_core(text.substr(8)).spec;
  return parse_core(text);
}

std::string validate(const std::string& core) {
  const CoreSpec spec = spec_from(core);
  const auto report = validate_core(spec);
  Json doc;
  doc["core"] = spec.name;
  doc["ok"] = report.ok();
  Json rules = Json::object();
  for (const auto& r : report.rules) rules[std::string(to_string(r.rule))] = r.passed;
  doc["rules"] = std::move(rules);
  return doc.dump();
}

std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> tower_counts(const std::string& core, int depth) {
  const auto tower = build_tower(spec_from(core), depth);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
  for (int k = 0; k <= tower.depth(); ++k) {
    const auto& g = tower.level(k);
    out.emplace_back(g.vertex_count(), g.edge_count(), g.face_count());
  }
  return out;
}

std::string certify(const std::string& core, int depth, std::size_t max_arc_length) {
  const Per2Core c = Per2Core::make(spec_from(core));
  return certify_core(c, {depth, max_arc_length, true}).dump();
}

std::string enumerate(std::size_t max_vertices, unsigned threads) {
  Json out = Json::array();
  for (const auto& c : enumerate_small_cores(max_vertices, threads)) {
    out.push_back({{"name", c.name()},
                   {"type", std::string(to_string(classify_type(c)))},
                   {"form", canonical_form(c.spec)},
                   {"core", core_to_json(c.spec)}});
  }
  return out.dump();
}

std::string apollonian(const std::array<double, 4>& root, double bound) {
  const auto p = generate_apollonian(root, bound);
  Json doc;
  doc["certificate"] = certify_packing(p, true);
  doc["packing"] = packing_to_json(p);
  return doc.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fatou graph towers and Apollonian packings";
  py::register_exception<Error>(m, "GasketError", PyExc_ValueError);

  m.def("bundled_core", [](const std::string& name) { return core_to_string(bundled_core(name).spec); },
        py::arg("name"));
  m.def("bundled_names", [] {
    std::vector<std::string> out;
    for (const auto& c : bundled_cores()) out.push_back(c.name());
    return out;
  });
  m.def("validate", &validate, py::arg("core"));
  m.def("tower_counts", &tower_counts, py::arg("core"), py::arg("depth"));
  m.def("certify", &certify, py::arg("core"), py::arg("depth") = 3, py::arg("max_arc_length") = 16);
  m.def("enumerate_cores", &enumerate, py::arg("max_vertices"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("descartes_fourth", &descartes_fourth, py::arg("k1"), py::arg("k2"), py::arg("k3"));
  m.def("apollonian", &apollonian, py::arg("root"), py::arg("bound"));
  m.def("compare", [](const std::string& a, const std::string& b) {
    return compare_certificates(Json::parse(a), Json::parse(b)).dump();
  });
}
