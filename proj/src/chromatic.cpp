#include "qgmf/chromatic.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "qgmf/adder.hpp"
#include "qgmf/oracle.hpp"

namespace qgmf {
namespace {

std::size_t bits_for(std::uint64_t count) {
    std::size_t b = 0;
    while ((std::uint64_t{1} << b) < count) ++b;
    return b;
}

bool is_power_of_two(std::size_t k) { return k != 0 && (k & (k - 1)) == 0; }

std::vector<gate::Control> color_pattern(const Register& reg, std::size_t color) {
    std::vector<gate::Control> out;
    for (std::size_t b = 0; b < reg.width; ++b) out.push_back({reg.qubit(b), ((color >> b) & 1) != 0});
    return out;
}

}  // namespace

Graph::Graph(std::size_t num_vertices, std::vector<Edge> edges) : num_vertices_(num_vertices) {
    if (num_vertices == 0) throw std::invalid_argument("graph needs at least one vertex");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u >= num_vertices || v >= num_vertices) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") references a missing vertex");
        }
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        }
        edges_.emplace_back(u, v);
    }
}

Graph Graph::complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph Graph::cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(e));
}

Graph Graph::edgeless(std::size_t n) { return Graph(n, {}); }

Graph example_graph() { return Graph(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

std::size_t count_violations(const Graph& graph, std::span<const std::size_t> colors) {
    if (colors.size() != graph.num_vertices()) throw std::invalid_argument("one color per vertex expected");
    std::size_t n = 0;
    for (const auto& [u, v] : graph.edges()) n += colors[u] == colors[v];
    return n;
}

// ---------------------------------------------------------------------------

ValueBlock ColoringInstance::block() const {
    return ValueBlock{layout.get(Role::Counter).offset, counter_width + 1};
}

ColoringInstance make_coloring_instance(const Graph& graph, std::size_t k, std::size_t capacity) {
    if (k == 0) throw std::invalid_argument("color count must be at least 1");
    ColoringInstance inst{graph, k, std::max<std::size_t>(1, bits_for(k)),
                          std::max<std::size_t>(1, bits_for(graph.edges().size() + 1)),
                          RegisterLayout(capacity)};
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        inst.layout.add(Role::VertexColor, inst.qubits_per_vertex, v);
    }
    inst.layout.add(Role::Counter, inst.counter_width);
    inst.layout.add(Role::Value, 1);
    inst.layout.add(Role::Overflow, 1);
    return inst;
}

Circuit uniform_color_circuit(const Register& reg, std::size_t k) {
    if (k == 0) throw std::invalid_argument("color count must be at least 1");
    if (k > (std::size_t{1} << reg.width)) throw std::invalid_argument("register too narrow for k colors");
    Circuit c;
    if (k == 1) return c;
    if (is_power_of_two(k)) {
        for (std::size_t b = 0; b < bits_for(k); ++b) c.add(gate::H{reg.qubit(b)});
        return c;
    }
    // Split the remaining mass bit by bit from the top; each prefix of higher
    // bits gets its own controlled rotation.
    const std::uint64_t kk = k;
    for (std::size_t j = reg.width; j-- > 0;) {
        const std::uint64_t span = std::uint64_t{1} << (j + 1);
        for (std::uint64_t p = 0; p * span < kk; ++p) {
            const std::uint64_t lo = p * span;
            const std::uint64_t n = std::min(kk, lo + span) - lo;
            const std::uint64_t n0 = std::min(kk, lo + span / 2) - lo;
            if (n0 == n) continue;
            const double theta = 2.0 * std::acos(std::sqrt(static_cast<double>(n0) / static_cast<double>(n)));
            std::vector<gate::Control> controls;
            for (std::size_t b = j + 1; b < reg.width; ++b) {
                controls.push_back({reg.qubit(b), ((p >> (b - j - 1)) & 1) != 0});
            }
            if (controls.empty()) {
                c.add(gate::RY{reg.qubit(j), theta});
            } else {
                Circuit inner;
                inner.add(gate::RY{reg.qubit(j), theta});
                c.append(controlled(inner, std::move(controls)));
            }
        }
    }
    return c;
}

StateVector prepare_color_superposition(const ColoringInstance& instance, Exec exec) {
    StateVector state(instance.layout, exec);
    for (std::size_t v = 0; v < instance.graph.num_vertices(); ++v) {
        state.apply(uniform_color_circuit(instance.layout.get(Role::VertexColor, v), instance.k));
    }
    return state;
}

Circuit build_violation_counter(const ColoringInstance& instance) {
    const auto& counter = instance.layout.get(Role::Counter);
    if (instance.graph.edges().size() >= (std::size_t{1} << counter.width)) {
        throw std::invalid_argument("counter register too narrow for the edge count");
    }
    const ShiftSpec inc{1, counter.width, counter.offset};
    Circuit c;
    for (const auto& [u, v] : instance.graph.edges()) {
        const auto& ru = instance.layout.get(Role::VertexColor, u);
        const auto& rv = instance.layout.get(Role::VertexColor, v);
        for (std::size_t color = 0; color < instance.k; ++color) {
            auto controls = color_pattern(ru, color);
            const auto more = color_pattern(rv, color);
            controls.insert(controls.end(), more.begin(), more.end());
            c.append(build_controlled_adder(inc, std::move(controls)));
        }
    }
    return c;
}

StateVector prepare_coloring_state(const ColoringInstance& instance, Exec exec) {
    StateVector state = prepare_color_superposition(instance, exec);
    state.apply(build_violation_counter(instance));
    attach_overflow(state, instance.block());
    return state;
}

std::size_t min_violations(const Graph& graph, std::size_t k, const QgmfConfig& config) {
    const ColoringInstance inst = make_coloring_instance(graph, k);
    const QgmfResult r = find_global_minimum(prepare_coloring_state(inst), inst.block(), config);
    if (r.g_m < 0) throw std::logic_error("negative violation count");
    return static_cast<std::size_t>(r.g_m);
}

std::size_t chromatic_number(const Graph& graph, const QgmfConfig& config) {
    std::size_t low = 1, high = graph.num_vertices();
    while (low < high) {
        const std::size_t k = low + (high - low) / 2;
        if (min_violations(graph, k, config) == 0) {
            high = k;
        } else {
            low = k + 1;
        }
    }
    return low;
}

// ---------------------------------------------------------------------------

BruteForceColoring brute_force_violations(const Graph& graph, std::size_t k) {
    if (k == 0) throw std::invalid_argument("color count must be at least 1");
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < graph.num_vertices(); ++v) {
        if (total > kBruteForceLimit / k) throw std::length_error("k^|V| exceeds the brute-force limit");
        total *= k;
    }
    BruteForceColoring out;
    out.counts.resize(total);
    out.minimum = graph.edges().size();
    std::vector<std::size_t> colors(graph.num_vertices(), 0);
    for (std::uint64_t a = 0; a < total; ++a) {
        out.counts[a] = count_violations(graph, colors);
        out.minimum = std::min(out.minimum, out.counts[a]);
        for (auto& c : colors) {  // odometer increment
            if (++c < k) break;
            c = 0;
        }
    }
    return out;
}

std::size_t brute_force_chromatic_number(const Graph& graph) {
    for (std::size_t k = 1; k <= graph.num_vertices(); ++k) {
        if (brute_force_violations(graph, k).minimum == 0) return k;
    }
    return graph.num_vertices();
}

}  // namespace qgmf
