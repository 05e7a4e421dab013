#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rgplanar/cli.hpp"
#include "rgplanar/errors.hpp"
#include "rgplanar/io.hpp"

namespace py = pybind11;
using namespace rgp;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SimpleGraph graph_from(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
    es.push_back(make_edge(u, v));
  }
  return SimpleGraph(n, std::move(es));
}

ElementSet connection_from(const RightGroupTable& s, const std::vector<std::string>& gens) {
  std::vector<int> members;
  for (const auto& g : gens) members.push_back(s.parse_element(g));
  return ElementSet(members);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cayley graphs of right groups and their planarity";
  py::register_exception<Error>(m, "RgpError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  m.def("group_elements", [](const std::string& spec) { return parse_group_spec(spec).names(); },
        py::arg("spec"));

  m.def(
      "decide",
      [](const std::string& spec, int k, int subject_cap, bool prefix_pruning) {
        DecisionCaps caps;
        caps.subject_cap = subject_cap;
        caps.prefix_pruning = prefix_pruning;
        const GroupTable g = parse_group_spec(spec);
        const auto v = decide_right_group_planarity(g, k, caps);
        Json j = verdict_to_json(v, right_group(g, k));
        j["predicted"] = characterization_predicts_planar(g, k) ? "planar" : "non_planar";
        if (v.verdict == Verdict::kPlanar) j["certificate_verified"] = verify_certificate(g, v);
        return to_python(j);
      },
      py::arg("spec"), py::arg("k"), py::arg("subject_cap") = kDefaultSubjectCap, py::arg("prefix_pruning") = true);

  m.def(
      "cayley_digraph",
      [](const std::string& spec, int k, const std::vector<std::string>& gens) {
        const RightGroupTable s = right_group(parse_group_spec(spec), k);
        return to_python(digraph_to_json(cayley_digraph(s, connection_from(s, gens))));
      },
      py::arg("spec"), py::arg("k"), py::arg("generators"));

  m.def(
      "to_dot",
      [](const std::string& spec, int k, const std::vector<std::string>& gens) {
        const RightGroupTable s = right_group(parse_group_spec(spec), k);
        return to_dot(cayley_digraph(s, connection_from(s, gens)));
      },
      py::arg("spec"), py::arg("k"), py::arg("generators"));

  m.def(
      "planarity",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        const SimpleGraph g = graph_from(n, edges);
        const auto r = test_planarity(g);
        Json j{{"planar", r.planar}};
        if (r.embedding) {
          j["embedding"] = embedding_to_json(*r.embedding);
          j["verified"] = verify_embedding_componentwise(*r.embedding);
        }
        if (r.witness) {
          j["witness"] = witness_to_json(*r.witness);
          j["verified"] = verify_kuratowski(g, *r.witness);
        }
        return to_python(j);
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "min_genus",
      [](int n, const std::vector<std::pair<int, int>>& edges, std::int64_t budget) -> py::object {
        const auto r = min_genus_bruteforce(graph_from(n, edges), budget);
        if (r.exceeded) return py::none();
        return py::int_(r.min_genus);
      },
      py::arg("n"), py::arg("edges"), py::arg("budget") = 10'000'000);

  m.def("catalog", [](int family_cap) { return to_python(catalog_to_json(maschke_catalog(family_cap))); },
        py::arg("family_cap") = kDefaultFamilyCap);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full{"rgplanar"};
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : full) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
