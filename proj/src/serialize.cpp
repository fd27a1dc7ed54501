#include "sforest/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sforest/error.hpp"

namespace sforest {
namespace {

using json = nlohmann::json;
using StringPair = std::pair<std::string, std::string>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<VarName> names_from(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of names");
  std::vector<VarName> out;
  for (const json& e : j) {
    if (!e.is_string()) bad(std::string(what) + " must be an array of names");
    out.emplace_back(e.get<std::string>());
  }
  return out;
}

std::vector<VarPair> pairs_from(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of pairs");
  std::vector<VarPair> out;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      bad(std::string(what) + " entries must be [name, name]");
    }
    out.emplace_back(VarName(e[0].get<std::string>()), VarName(e[1].get<std::string>()));
  }
  return out;
}

json names_to(const std::vector<VarName>& names) {
  json out = json::array();
  for (const VarName& v : names) out.push_back(v.str());
  return out;
}

std::vector<StringPair> string_pairs(const Relation& r) {
  std::vector<StringPair> out;
  for (const auto& [a, b] : r.pairs()) out.emplace_back(a.str(), b.str());
  return out;
}

json pairs_to(const std::vector<StringPair>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

json to_json(const Relation& r) {
  return {{"domain", names_to(r.domain())}, {"pairs", pairs_to(string_pairs(r))}};
}

Relation relation_from_json(const json& j) {
  return Relation(names_from(field(j, "domain"), "domain"), pairs_from(field(j, "pairs"), "pairs"));
}

json to_json(const Relationship& r) {
  std::vector<std::vector<StringPair>> family;
  for (const Relation& m : r.members()) family.push_back(string_pairs(m));
  std::sort(family.begin(), family.end());
  json fam = json::array();
  for (const auto& m : family) fam.push_back(pairs_to(m));
  return {{"domain", names_to(r.domain())}, {"family", fam}};
}

Relationship relationship_from_json(const json& j) {
  std::vector<VarName> domain = names_from(field(j, "domain"), "domain");
  const json& fam = field(j, "family");
  if (!fam.is_array()) bad("family must be an array");
  std::vector<Relation> members;
  for (const json& m : fam) members.emplace_back(domain, pairs_from(m, "family member"));
  return Relationship(domain, members);
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a.str(), b.str()});
  return {{"vertices", names_to(g.vertices())}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  return Graph(names_from(field(j, "vertices"), "vertices"), pairs_from(field(j, "edges"), "edges"));
}

Graph graph_from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<VarName> vertices;
  std::vector<VarPair> edges;
  bool header = false;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first.front() == '#') continue;
    if (!header) {
      if (first != "vertices:") bad("edge list must start with 'vertices:'");
      for (std::string w; words >> w;) vertices.emplace_back(w);
      header = true;
      continue;
    }
    std::string second;
    std::string extra;
    if (!(words >> second) || (words >> extra)) bad("edge line must hold two names: '" + line + "'");
    edges.emplace_back(VarName(first), VarName(second));
  }
  if (!header) bad("edge list must start with 'vertices:'");
  return Graph(vertices, edges);
}

Graph parse_graph(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("graph file is not valid JSON");
    return graph_from_json(j);
  }
  return graph_from_edge_list(text);
}

json to_json(const ForestSet& fs) {
  std::vector<std::string> rendered;
  rendered.reserve(fs.forests.size());
  for (const STerm& t : fs.forests) rendered.push_back(render_sterm(t));
  std::sort(rendered.begin(), rendered.end());
  return rendered;
}

json film_to_json(const std::vector<FilmFrame>& film) {
  json frames = json::array();
  for (const FilmFrame& f : film) {
    json frame = json::array();
    for (const Graph& g : f) frame.push_back(to_json(g));
    frames.push_back(frame);
  }
  return {{"frames", frames}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sforest
