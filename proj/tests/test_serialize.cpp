#include <doctest.h>

#include "helpers.hpp"
#include "sforest/serialize.hpp"

using namespace sforest;
using json = nlohmann::json;
using testing::error_kind;
using testing::graph;
using testing::rel;

TEST_CASE("relation JSON") {
  const Relation r = rel({"y", "x", "z"}, {{"y", "z"}, {"x", "z"}, {"x", "y"}});
  const json j = to_json(r);
  CHECK(j.dump() == R"({"domain":["x","y","z"],"pairs":[["x","y"],["x","z"],["y","z"]]})");
  CHECK(relation_from_json(j) == r);
  CHECK(error_kind([] { relation_from_json(json::parse(R"({"domain":["x"]})")); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { relation_from_json(json::parse(R"({"domain":["x"],"pairs":[["x"]]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(error_kind([] { relation_from_json(json::parse(R"({"domain":[1],"pairs":[]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(error_kind([] { relation_from_json(json::parse(R"({"domain":["x"],"pairs":[["x","y"]]})")); }) ==
        ErrorKind::InvalidRelation);
  CHECK(error_kind([] { relation_from_json(json::parse(R"({"domain":["X"],"pairs":[]})")); }) ==
        ErrorKind::InvalidName);
}

TEST_CASE("relationship JSON") {
  const Relationship u(vars({"y", "x"}), {rel({"x", "y"}, {{"y", "x"}}), rel({"x", "y"}, {{"x", "y"}}), rel({"x", "y"})});
  const json j = to_json(u);
  CHECK(j.dump() == R"({"domain":["x","y"],"family":[[],[["x","y"]],[["y","x"]]]})");
  CHECK(relationship_from_json(j) == u);
}

TEST_CASE("graph JSON and edge lists") {
  const Graph g = graph({"z", "x", "y"}, {{"z", "y"}, {"y", "x"}});
  CHECK(to_json(g).dump() == R"({"edges":[["x","y"],["y","z"]],"vertices":["x","y","z"]})");
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK(parse_graph("vertices: x y z\n# comment\n\nx y\nz y\n") == g);
  CHECK(parse_graph("  {\"vertices\":[\"x\",\"y\",\"z\"],\"edges\":[[\"y\",\"x\"],[\"y\",\"z\"]]}") == g);
  CHECK(error_kind([] { parse_graph("x y\n"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_graph("vertices: x y\nx\n"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_graph("vertices: x y\nx y z\n"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_graph("{\"vertices\": "); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_graph("vertices: x\nx q\n"); }) == ErrorKind::InvalidGraph);
  CHECK(error_kind([] { parse_graph(""); }) == ErrorKind::InvalidInput);
}

TEST_CASE("forest sets and films") {
  const Graph path = graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  const json forests = to_json(t_forests(path));
  CHECK(forests == json({"x*y*z", "x*z*y", "y*(x+z)", "z*x*y", "z*y*x"}));
  const json film = film_to_json(destruction_film(path, parse_sterm("y*(x+z)")));
  CHECK(film["frames"].size() == 3);
  CHECK(film["frames"][1][0] == to_json(graph({"x"})));
  CHECK(film["frames"][2] == json::array());
}

TEST_CASE("files") {
  const std::string dir = SFOREST_GRAPHS_DIR;
  CHECK(parse_graph(read_text_file(dir + "/path3.json")) == graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}}));
  CHECK(parse_graph(read_text_file(dir + "/star5.txt")).edge_count() == 4);
  CHECK(error_kind([&] { read_text_file(dir + "/missing.json"); }) == ErrorKind::InvalidInput);
}
