#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "contractlab/generators.hpp"
#include "contractlab/graph.hpp"
#include "contractlab/multi_agent.hpp"
#include "contractlab/ptas.hpp"
#include "contractlab/single_agent.hpp"
#include "contractlab/valuation.hpp"

namespace contractlab {

struct SingleAgentInstance {
  Valuation valuation;
  std::vector<Rational> costs;
};

using Instance = std::variant<SingleAgentInstance, GraphInstance>;

/// Instance JSON, version "1". Rationals travel as "p/q" strings, never
/// floats. Unknown fields are rejected. Multi-agent files must carry
/// "cost_convention" ("absolute" or "reparameterized"); absolute costs are
/// multiplied by E_max on load so the in-memory convention is always the
/// reparameterized one.
Instance load_instance(const std::filesystem::path& path);
Instance parse_instance_json(const std::string& text, const std::string& origin = "<memory>");

std::string instance_to_json(const SingleAgentInstance& inst);
std::string instance_to_json(const GraphInstance& inst);
std::string instance_to_json(const GeneratedInstance& inst);
void save_instance(const SingleAgentInstance& inst, const std::filesystem::path& path);
void save_instance(const GraphInstance& inst, const std::filesystem::path& path);
void save_instance(const GeneratedInstance& inst, const std::filesystem::path& path);

/// Plain text graph format: one "u v" pair per line (whitespace separated,
/// '#' comments allowed). Node count is 1 + the largest endpoint.
Graph load_edge_list(const std::filesystem::path& path);

/// Breakpoint curve rows (t, bitmask, f, mu_p), exact rationals.
std::string curve_to_csv(const BreakpointCurve& curve, const Valuation& v);

std::string single_agent_report_json(const BreakpointCurve& curve, const ContractChoice& best,
                                     const Valuation& v, const OracleStats& stats);

std::string multi_brute_report_json(const GraphInstance& g, const NodeSet& best,
                                    const UtilityBreakdown& value);

std::string ptas_report_json(const PtasReport& report);
/// Candidate table with per-stage provenance, one row per rounded draw.
std::string ptas_candidates_csv(const PtasReport& report);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace contractlab
