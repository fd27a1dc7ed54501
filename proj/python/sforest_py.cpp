#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sforest/collapse.hpp"
#include "sforest/error.hpp"
#include "sforest/relationship.hpp"
#include "sforest/serialize.hpp"
#include "sforest/verify.hpp"

namespace py = pybind11;
using namespace sforest;

namespace {

std::vector<std::string> rendered(const std::vector<STerm>& terms) {
  std::vector<std::string> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(render_sterm(t));
  return out;
}

std::vector<VarName> names_of(const std::vector<std::string>& names) {
  std::vector<VarName> out;
  out.reserve(names.size());
  for (const auto& n : names) out.emplace_back(n);
  return out;
}

SkeletonFormat format_of(const std::string& format) {
  if (format == "json") return SkeletonFormat::Json;
  if (format == "dot") return SkeletonFormat::Dot;
  throw Error(ErrorKind::InvalidInput, "unknown format: " + format);
}

}  // namespace

PYBIND11_MODULE(_sforest, m) {
  m.doc() = "S-terms, forest-like relations and permutohedron collapses";

  py::register_exception<Error>(m, "SforestError", PyExc_ValueError);

  m.def("canonical", [](const std::string& text) { return render_sterm(parse_sterm(text)); }, py::arg("term"),
        "Parse an S-term and render its canonical form.");
  m.def("kappa_json", [](const std::string& text) { return to_json(kappa(parse_sterm(text))).dump(); },
        py::arg("term"));
  m.def("sterm_of_ftp_json",
        [](const std::string& relation) { return render_sterm(sterm_of_ftp(relation_from_json(nlohmann::json::parse(relation)))); },
        py::arg("relation"));
  m.def("is_s_forest", [](const std::string& text) { return is_s_forest(parse_sterm(text)); }, py::arg("term"));
  m.def("is_s_tree", [](const std::string& text) { return is_s_tree(parse_sterm(text)); }, py::arg("term"));
  m.def("t_forests", [](const std::string& graph) { return rendered(t_forests(parse_graph(graph)).forests); },
        py::arg("graph"));
  m.def("collapse_export",
        [](const std::string& graph, const std::string& format) {
          return export_skeleton(collapse(parse_graph(graph)), format_of(format));
        },
        py::arg("graph"), py::arg("format") = "json");
  m.def("class_of_permutation",
        [](const std::string& graph, const std::vector<std::string>& order) {
          return render_sterm(class_of_permutation(parse_graph(graph), Permutation(names_of(order))));
        },
        py::arg("graph"), py::arg("order"));
  m.def("linear_extensions_json",
        [](const std::string& relation) {
          std::vector<std::vector<std::string>> out;
          for (const auto& p : linear_extensions(relation_from_json(nlohmann::json::parse(relation)))) {
            std::vector<std::string> seq;
            for (const auto& v : p.sequence()) seq.push_back(v.str());
            out.push_back(std::move(seq));
          }
          return out;
        },
        py::arg("relation"));
  m.def("verify_json",
        [](std::size_t max_n, std::size_t random_count, std::uint64_t seed) {
          const VerifyOptions options{max_n, random_count, seed};
          return verify_report_json(options, verify_all(options)).dump();
        },
        py::arg("max_n") = 4, py::arg("random_count") = 0, py::arg("seed") = 0);
}
