#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qgmf/circuit.hpp"
#include "qgmf/layout.hpp"
#include "qgmf/qgmf.hpp"
#include "qgmf/state_vector.hpp"

namespace qgmf {

using Edge = std::pair<std::size_t, std::size_t>;

// Undirected simple graph. Edges are stored with u < v, in insertion order.
class Graph {
public:
    // Throws std::invalid_argument on self-loops, duplicates (in either
    // orientation) or out-of-range vertices.
    Graph(std::size_t num_vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return num_vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph edgeless(std::size_t n);

private:
    std::size_t num_vertices_;
    std::vector<Edge> edges_;
};

// The four-vertex, five-edge example graph: (0,1) (0,3) (1,2) (1,3) (2,3).
Graph example_graph();

// Number of edges whose endpoints share a color.
std::size_t count_violations(const Graph& graph, std::span<const std::size_t> colors);

struct ColoringInstance {
    Graph graph;
    std::size_t k = 1;
    std::size_t qubits_per_vertex = 1;  // ceil(log2 k), at least 1
    std::size_t counter_width = 1;      // ceil(log2(|E| + 1)), at least 1
    // VertexColor registers (index = vertex), Counter, a one-qubit Value pad
    // that stays |0> so the counter reads as a non-negative signed number,
    // then the Overflow qubit.
    RegisterLayout layout;

    // Counter plus pad: what the minimum finder shifts and scans.
    ValueBlock block() const;
};

ColoringInstance make_coloring_instance(const Graph& graph, std::size_t k,
                                        std::size_t capacity = kDefaultCapacity);

// Uniform superposition over colors {0, ..., k-1} on one register. Hadamards
// when k is a power of two, otherwise a tree of pattern-controlled RY gates.
Circuit uniform_color_circuit(const Register& reg, std::size_t k);

StateVector prepare_color_superposition(const ColoringInstance& instance,
                                        Exec exec = Exec::Parallel);

// For every edge and every color, A(1) on the counter controlled on both
// endpoint registers holding that color.
Circuit build_violation_counter(const ColoringInstance& instance);

// Color superposition, violation counter and overflow copy: the state the
// minimum finder starts from.
StateVector prepare_coloring_state(const ColoringInstance& instance, Exec exec = Exec::Parallel);

std::size_t min_violations(const Graph& graph, std::size_t k, const QgmfConfig& config);

// Binary search for the smallest k in [1, |V|] with min_violations == 0.
std::size_t chromatic_number(const Graph& graph, const QgmfConfig& config);

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

struct BruteForceColoring {
    // counts[a] is the violation count of assignment a, where vertex v has
    // color (a / k^v) mod k.
    std::vector<std::size_t> counts;
    std::size_t minimum = 0;
};

// Throws std::length_error when k^|V| exceeds kBruteForceLimit.
BruteForceColoring brute_force_violations(const Graph& graph, std::size_t k);
std::size_t brute_force_chromatic_number(const Graph& graph);

}  // namespace qgmf
