#include "qgmf/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace qgmf {

using nlohmann::json;

json to_json(const QgmfResult& result) {
    json trace = json::array();
    for (const auto& t : result.trace) {
        json step{{"s", t.s},
                  {"low", t.low},
                  {"high", t.high},
                  {"n_neg_class", to_string(t.n_neg_class)},
                  {"n_neg", t.n_neg}};
        if (t.y_min) step["y_min"] = *t.y_min;
        trace.push_back(std::move(step));
    }
    json confirmations = json::array();
    for (const auto& c : result.confirmations) {
        json step{{"s", c.s}, {"n_neg", c.n_neg}};
        if (c.y_min) step["y_min"] = *c.y_min;
        confirmations.push_back(std::move(step));
    }
    return json{{"g_m", result.g_m},
                {"outer_steps", result.outer_steps},
                {"confirmation_passes", result.confirmation_passes},
                {"trace", std::move(trace)},
                {"confirmations", std::move(confirmations)}};
}

json to_json(const Graph& graph) {
    json edges = json::array();
    for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
    return json{{"vertices", graph.num_vertices()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
    }
    if (!j["vertices"].is_number_unsigned()) throw std::invalid_argument("\"vertices\" must be a non-negative integer");
    if (!j["edges"].is_array()) throw std::invalid_argument("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
            throw std::invalid_argument("each edge must be a pair of vertex indices");
        }
        edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    return Graph(j["vertices"].get<std::size_t>(), std::move(edges));
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed graph file " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

json to_json(const OracleSpec& spec) {
    if (const auto* t = std::get_if<FunctionTable>(&spec)) {
        return json{{"kind", "table"}, {"n", t->input_qubits}, {"m", t->value_qubits}, {"values", t->values}};
    }
    const auto& v = std::get<AmplitudeVector>(spec);
    return json{{"kind", "vector"}, {"m", v.value_qubits}, {"amplitudes", v.amplitudes}};
}

OracleSpec oracle_from_json(const json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        OracleSpec spec;
        if (kind == "table") {
            spec = FunctionTable{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(),
                                 j.at("values").get<std::vector<std::int64_t>>()};
        } else if (kind == "vector") {
            spec = AmplitudeVector{j.at("m").get<std::size_t>(), j.at("amplitudes").get<std::vector<double>>()};
        } else {
            throw std::invalid_argument("unknown oracle kind \"" + kind + "\"");
        }
        validate(spec);
        return spec;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed oracle JSON: ") + e.what());
    }
}

SearchMode parse_mode(const std::string& text) {
    if (text == "exact") return SearchMode::Exact;
    if (text == "vqs" || text == "variational") return SearchMode::Variational;
    throw std::invalid_argument("mode must be exact or vqs, got \"" + text + "\"");
}

void apply_config_json(const json& j, QgmfConfig& config) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "threshold") config.threshold = value.get<std::size_t>();
            else if (key == "mode") config.mode = parse_mode(value.get<std::string>());
            else if (key == "shots") config.shots = value.get<std::size_t>();
            else if (key == "seed") config.seed = value.get<std::uint64_t>();
            else if (key == "max_outer_iters") config.max_outer_iters = value.get<std::size_t>();
            else if (key == "epsilon") config.epsilon = value.get<std::int64_t>();
            else if (key == "ansatz_layers") config.ansatz_layers = value.get<std::size_t>();
            else if (key == "max_iterations") config.optimizer.max_iterations = value.get<std::size_t>();
            else if (key == "patience") config.optimizer.patience = value.get<std::size_t>();
            else if (key == "plateau_tolerance") config.optimizer.plateau_tolerance = value.get<double>();
            else if (key == "restarts") config.optimizer.restarts = value.get<std::size_t>();
            else throw std::invalid_argument("unknown config key \"" + key + "\"");
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad config value: ") + e.what());
    }
}

}  // namespace qgmf
