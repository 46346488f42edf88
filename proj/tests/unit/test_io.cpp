#include <doctest.h>

#include "contractlab/io.hpp"

using namespace contractlab;

namespace {
SingleAgentInstance triangle_instance() {
  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  return SingleAgentInstance{
      Valuation::graph_supermodular(tri),
      {make_rational(1, 9), make_rational(1, 9), make_rational(1, 9)}};
}
}  // namespace

TEST_CASE("single-agent instance round trip") {
  const SingleAgentInstance inst = triangle_instance();
  const std::string text = instance_to_json(inst);
  const Instance parsed = parse_instance_json(text);
  REQUIRE(std::holds_alternative<SingleAgentInstance>(parsed));
  CHECK(instance_to_json(std::get<SingleAgentInstance>(parsed)) == text);
}

TEST_CASE("multi-agent instance round trip and conventions") {
  GraphInstance g(complete_graph(4), make_rational(2, 3));
  const std::string text = instance_to_json(g);
  const Instance parsed = parse_instance_json(text);
  REQUIRE(std::holds_alternative<GraphInstance>(parsed));
  CHECK(std::get<GraphInstance>(parsed).cost == make_rational(2, 3));

  // absolute costs are scaled by E_max on load
  const std::string absolute = R"({
    "version": "1", "kind": "multi-agent-graph", "n": 4,
    "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],
    "cost": "1/9", "cost_convention": "absolute"
  })";
  const Instance abs_parsed = parse_instance_json(absolute);
  CHECK(std::get<GraphInstance>(abs_parsed).cost == make_rational(2, 3));
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_AS(parse_instance_json("{"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"version":"1","kind":"nope"})"), ParseError);
  CHECK_THROWS_AS(parse_instance_json(R"({"version":"2","kind":"single-agent"})"), ParseError);

  // exact rationals only; 1/0 is rejected
  const std::string zero_den = R"({
    "version": "1", "kind": "multi-agent-graph", "n": 3,
    "edges": [[0,1]], "cost": "1/0", "cost_convention": "reparameterized"
  })";
  CHECK_THROWS_AS(parse_instance_json(zero_den), ParseError);

  // unknown fields are rejected
  const std::string extra = R"({
    "version": "1", "kind": "multi-agent-graph", "n": 3,
    "edges": [[0,1]], "cost": "1/3", "cost_convention": "reparameterized",
    "surprise": 7
  })";
  CHECK_THROWS_AS(parse_instance_json(extra), ParseError);

  // missing convention flag is an error, not a silent default
  const std::string no_convention = R"({
    "version": "1", "kind": "multi-agent-graph", "n": 3,
    "edges": [[0,1]], "cost": "1/3"
  })";
  CHECK_THROWS_AS(parse_instance_json(no_convention), ParseError);
}

TEST_CASE("rational parse example") {
  const std::string text = R"({
    "version": "1", "kind": "multi-agent-graph", "n": 3,
    "edges": [[0,1]], "cost": "1/3", "cost_convention": "reparameterized"
  })";
  CHECK(std::get<GraphInstance>(parse_instance_json(text)).cost == make_rational(1, 3));
}

TEST_CASE("curve csv") {
  const Valuation v = Valuation::explicit_table(1, {Rational(0), Rational(1)});

  BreakpointCurve empty;
  CHECK(curve_to_csv(empty, v) == "t,bitmask,f,mu_p\n");

  BreakpointCurve curve;
  curve.points.push_back({Rational(0), kEmptySet});
  curve.points.push_back({make_rational(1, 2), 0b1});
  const std::string csv = curve_to_csv(curve, v);
  CHECK(csv ==
        "t,bitmask,f,mu_p\n"
        "0,0,0,0\n"
        "1/2,1,1,1/2\n");
}

TEST_CASE("edge list text format") {
  const auto path = std::filesystem::temp_directory_path() / "contractlab_edges.txt";
  write_text_file(path, "# comment\n0 1\n1 2\n\n2 3\n");
  const Graph g = load_edge_list(path);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("generated instance serialization carries metadata") {
  const GeneratedInstance gen = gen_kclique_reduction(complete_graph(4), 4);
  const std::string text = instance_to_json(gen);
  CHECK(text.find("kclique-reduction") != std::string::npos);
  CHECK(text.find("positive_case_mu") != std::string::npos);
  // still loadable as a plain instance
  const Instance parsed = parse_instance_json(text);
  CHECK(std::get<GraphInstance>(parsed).cost == make_rational(2, 3));
}
