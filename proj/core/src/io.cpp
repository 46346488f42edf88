#include "contractlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace contractlab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw ParseError(origin + ": " + what);
}

void check_fields(const json& obj, const std::set<std::string>& allowed,
                  const std::string& origin, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) fail(origin, "unknown field '" + key + "' in " + where);
  }
}

std::string get_string(const json& obj, const char* key, const std::string& origin) {
  if (!obj.contains(key)) fail(origin, std::string("missing field '") + key + "'");
  if (!obj[key].is_string()) fail(origin, std::string("field '") + key + "' must be a string");
  return obj[key].get<std::string>();
}

int get_int(const json& obj, const char* key, const std::string& origin) {
  if (!obj.contains(key)) fail(origin, std::string("missing field '") + key + "'");
  if (!obj[key].is_number_integer()) fail(origin, std::string("field '") + key + "' must be an integer");
  return obj[key].get<int>();
}

Rational get_rational(const json& node, const std::string& origin, const std::string& where) {
  if (!node.is_string()) fail(origin, where + " must be a \"p/q\" string");
  try {
    return parse_rational(node.get<std::string>());
  } catch (const ParseError& e) {
    fail(origin, where + ": " + e.what());
  }
}

std::vector<std::pair<int, int>> get_edges(const json& node, const std::string& origin) {
  if (!node.is_array()) fail(origin, "'edges' must be an array of [u, v] pairs");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : node) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(origin, "'edges' entries must be [u, v] integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

Instance parse_instance(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "instance file must be a JSON object");
  const std::string version = get_string(doc, "version", origin);
  if (version != "1") fail(origin, "unsupported version '" + version + "'");
  const std::string kind = get_string(doc, "kind", origin);

  if (kind == "single-agent") {
    check_fields(doc, {"version", "kind", "n", "valuation", "costs"}, origin, "instance");
    const int n = get_int(doc, "n", origin);
    if (n < 1 || n > 63) fail(origin, "'n' out of range");
    if (!doc.contains("valuation") || !doc["valuation"].is_object())
      fail(origin, "missing 'valuation' object");
    const json& val = doc["valuation"];
    const std::string type = get_string(val, "type", origin);

    Valuation v = Valuation::additive({});
    if (type == "additive") {
      check_fields(val, {"type", "weights"}, origin, "valuation");
      if (!val.contains("weights") || !val["weights"].is_array() ||
          val["weights"].size() != static_cast<std::size_t>(n))
        fail(origin, "'weights' must be an array of n rationals");
      std::vector<Rational> w;
      for (const auto& x : val["weights"]) w.push_back(get_rational(x, origin, "weight"));
      v = Valuation::additive(std::move(w));
    } else if (type == "graph") {
      check_fields(val, {"type", "edges"}, origin, "valuation");
      if (!val.contains("edges")) fail(origin, "graph valuation needs 'edges'");
      try {
        v = Valuation::graph_supermodular(Graph(n, get_edges(val["edges"], origin)));
      } catch (const Error& e) {
        fail(origin, e.what());
      }
    } else if (type == "table") {
      check_fields(val, {"type", "values"}, origin, "valuation");
      if (!val.contains("values") || !val["values"].is_array() ||
          val["values"].size() != (std::size_t{1} << n))
        fail(origin, "'values' must be an array of 2^n rationals");
      std::vector<Rational> t;
      for (const auto& x : val["values"]) t.push_back(get_rational(x, origin, "table value"));
      try {
        v = Valuation::explicit_table(n, std::move(t));
      } catch (const Error& e) {
        fail(origin, e.what());
      }
    } else {
      fail(origin, "unknown valuation type '" + type + "'");
    }

    if (!doc.contains("costs") || !doc["costs"].is_array() ||
        doc["costs"].size() != static_cast<std::size_t>(n))
      fail(origin, "'costs' must be an array of n rationals");
    std::vector<Rational> costs;
    for (const auto& x : doc["costs"]) costs.push_back(get_rational(x, origin, "cost"));
    return SingleAgentInstance{std::move(v), std::move(costs)};
  }

  if (kind == "multi-agent-graph") {
    check_fields(doc, {"version", "kind", "n", "edges", "cost", "cost_convention", "provenance",
                       "metadata"},
                 origin, "instance");
    const int n = get_int(doc, "n", origin);
    if (!doc.contains("edges")) fail(origin, "missing 'edges'");
    if (!doc.contains("cost")) fail(origin, "missing 'cost'");
    if (!doc.contains("cost_convention"))
      fail(origin, "missing 'cost_convention' (\"absolute\" or \"reparameterized\")");
    const std::string convention = get_string(doc, "cost_convention", origin);
    Rational cost = get_rational(doc["cost"], origin, "cost");
    Graph graph;
    try {
      graph = Graph(n, get_edges(doc["edges"], origin));
    } catch (const Error& e) {
      fail(origin, e.what());
    }
    if (convention == "absolute") {
      cost = cost * graph.e_max();
    } else if (convention != "reparameterized") {
      fail(origin, "cost_convention must be 'absolute' or 'reparameterized'");
    }
    try {
      return GraphInstance(std::move(graph), std::move(cost));
    } catch (const Error& e) {
      fail(origin, e.what());
    }
  }

  fail(origin, "unknown kind '" + kind + "'");
}

json valuation_to_json(const Valuation& v) {
  json out;
  switch (v.kind()) {
    case ValuationKind::additive: {
      out["type"] = "additive";
      json w = json::array();
      for (const auto& x : v.weights()) w.push_back(rational_to_string(x));
      out["weights"] = std::move(w);
      break;
    }
    case ValuationKind::graph_supermodular: {
      out["type"] = "graph";
      json e = json::array();
      for (auto [a, b] : v.graph().edges()) e.push_back(json::array({a, b}));
      out["edges"] = std::move(e);
      break;
    }
    case ValuationKind::explicit_table: {
      out["type"] = "table";
      json t = json::array();
      const ActionSet all = full_set(v.n());
      for (ActionSet s = 0; s <= all; ++s) t.push_back(rational_to_string(v.value(s)));
      out["values"] = std::move(t);
      break;
    }
  }
  return out;
}

json graph_instance_to_json(const GraphInstance& g) {
  json doc;
  doc["version"] = "1";
  doc["kind"] = "multi-agent-graph";
  doc["n"] = g.n();
  json e = json::array();
  for (auto [a, b] : g.graph.edges()) e.push_back(json::array({a, b}));
  doc["edges"] = std::move(e);
  doc["cost"] = rational_to_string(g.cost);
  doc["cost_convention"] = "reparameterized";
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance_json(read_text_file(path), path.string());
}

Instance parse_instance_json(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(origin, e.what());
  }
  return parse_instance(doc, origin);
}

std::string instance_to_json(const SingleAgentInstance& inst) {
  json doc;
  doc["version"] = "1";
  doc["kind"] = "single-agent";
  doc["n"] = inst.valuation.n();
  doc["valuation"] = valuation_to_json(inst.valuation);
  json c = json::array();
  for (const auto& x : inst.costs) c.push_back(rational_to_string(x));
  doc["costs"] = std::move(c);
  return dump(doc);
}

std::string instance_to_json(const GraphInstance& inst) { return dump(graph_instance_to_json(inst)); }

std::string instance_to_json(const GeneratedInstance& inst) {
  json doc = graph_instance_to_json(inst.instance);
  doc["provenance"] = inst.provenance;
  doc["metadata"] = json(inst.metadata);
  return dump(doc);
}

void save_instance(const SingleAgentInstance& inst, const std::filesystem::path& path) {
  write_text_file(path, instance_to_json(inst));
}
void save_instance(const GraphInstance& inst, const std::filesystem::path& path) {
  write_text_file(path, instance_to_json(inst));
}
void save_instance(const GeneratedInstance& inst, const std::filesystem::path& path) {
  write_text_file(path, instance_to_json(inst));
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::vector<std::pair<int, int>> edges;
  int max_node = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(u, v);
    max_node = std::max({max_node, u, v});
  }
  return Graph(max_node + 1, std::move(edges));
}

std::string curve_to_csv(const BreakpointCurve& curve, const Valuation& v) {
  std::string out = "t,bitmask,f,mu_p\n";
  for (const auto& bp : curve.points) {
    const Rational f = v.value(bp.set);
    const Rational mu = (Rational(1) - bp.t) * f;
    out += rational_to_string(bp.t) + "," + std::to_string(bp.set) + "," + rational_to_string(f) +
           "," + rational_to_string(mu) + "\n";
  }
  return out;
}

std::string single_agent_report_json(const BreakpointCurve& curve, const ContractChoice& best,
                                     const Valuation& v, const OracleStats& stats) {
  json doc;
  doc["kind"] = "single-agent-report";
  json points = json::array();
  for (const auto& bp : curve.points) {
    json p;
    p["t"] = rational_to_string(bp.t);
    p["set"] = bp.set;
    const Rational f = v.value(bp.set);
    p["f"] = rational_to_string(f);
    p["mu_p"] = rational_to_string((Rational(1) - bp.t) * f);
    points.push_back(std::move(p));
  }
  doc["curve"] = std::move(points);
  doc["optimal"]["t"] = rational_to_string(best.t);
  doc["optimal"]["set"] = best.set;
  doc["optimal"]["utility"] = rational_to_string(best.utility);
  doc["stats"]["demand_calls"] = stats.demand_calls;
  doc["stats"]["value_calls"] = stats.value_calls;
  return dump(doc);
}

std::string multi_brute_report_json(const GraphInstance& g, const NodeSet& best,
                                    const UtilityBreakdown& value) {
  json doc;
  doc["kind"] = "multi-brute-report";
  doc["n"] = g.n();
  doc["cost"] = rational_to_string(g.cost);
  doc["best_set"] = best.to_indices();
  doc["mu"] = rational_to_string(value.mu);
  doc["mu_float"] = value.mu_f();
  doc["left"] = rational_to_string(value.left);
  doc["right"] = rational_to_string(value.right);
  return dump(doc);
}

std::string ptas_report_json(const PtasReport& r) {
  json doc;
  doc["kind"] = "ptas-report";
  doc["config"]["epsilon"] = r.epsilon;
  doc["config"]["reps"] = r.reps;
  doc["config"]["m"] = r.m;
  doc["config"]["rounding_draws"] = r.rounding_draws;
  doc["config"]["seed"] = r.seed;
  doc["config"]["size_guesses"] = r.size_guesses;
  doc["config"]["edge_guesses"] = r.edge_guesses;
  doc["stages"]["multisets_drawn"] = r.multisets_drawn;
  doc["stages"]["filters_built"] = r.filters_built;
  doc["stages"]["filters_empty"] = r.filters_empty;
  doc["stages"]["lp_infeasible_precheck"] = r.lp_infeasible_precheck;
  doc["stages"]["lps_solved"] = r.lps_solved;
  doc["stages"]["lps_infeasible"] = r.lps_infeasible;
  doc["stages"]["candidates"] = r.candidates;
  doc["best"]["set"] = r.best_set;
  doc["best"]["mu"] = r.best_mu;
  doc["best"]["left"] = r.best_left;
  doc["best"]["right"] = r.best_right;
  doc["best"]["rep"] = r.winner_rep;
  doc["best"]["size_guess"] = r.winner_size_guess;
  doc["best"]["edge_guess"] = r.winner_edge_guess;
  doc["best"]["draw"] = r.winner_draw;
  return dump(doc);
}

std::string ptas_candidates_csv(const PtasReport& r) {
  std::string out = "rep,size_guess,edge_guess,draw,set_size,mu\n";
  for (const auto& row : r.candidate_table) {
    out += std::to_string(row.rep) + "," + std::to_string(row.size_guess) + "," +
           std::to_string(row.edge_guess) + "," + std::to_string(row.draw) + "," +
           std::to_string(row.set_size) + "," + fmt_double(row.mu) + "\n";
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace contractlab
