#pragma once

#include <string>

#include <json.hpp>

#include "qgmf/chromatic.hpp"
#include "qgmf/oracle.hpp"
#include "qgmf/qgmf.hpp"

namespace qgmf {

// {g_m, outer_steps, confirmation_passes, trace:[{s, low, high, n_neg_class}],
//  confirmations:[...]}
nlohmann::json to_json(const QgmfResult& result);

// {"vertices": V, "edges": [[u, v], ...]}
nlohmann::json to_json(const Graph& graph);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph(const std::string& path);

// {"kind": "table", "n", "m", "values"} or {"kind": "vector", "m", "amplitudes"},
// n input qubits and m value qubits.
nlohmann::json to_json(const OracleSpec& spec);
OracleSpec oracle_from_json(const nlohmann::json& j);

// Overlays recognised keys onto `config`; unknown keys are rejected.
void apply_config_json(const nlohmann::json& j, QgmfConfig& config);

SearchMode parse_mode(const std::string& text);

}  // namespace qgmf
