#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "reliab/rational.hpp"

namespace reliab {

struct Edge {
    std::size_t u;
    std::size_t v;
    Rational weight;

    bool is_loop() const { return u == v; }
};

// Undirected labeled multigraph. Loops and parallel edges are allowed;
// edge identity is the index into `edges`. Vertex ids are dense 0..n-1.
// Instances are treated as immutable values once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : n_(n) {}

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const;

    void add_edge(std::size_t u, std::size_t v, Rational w = Rational(1));

    // Copy of this graph with every edge weight replaced by w.
    Graph with_constant_weight(const Rational& w) const;

    bool is_connected() const;

    // Number of connected components of (V, A); isolated vertices count.
    std::size_t kappa(const std::vector<std::size_t>& edge_subset) const;
    // Same, with the subset given as a bitmask over edge ids (m <= 64).
    std::size_t kappa_mask(std::uint64_t subset) const;
    std::size_t kappa_all() const;

    bool is_bridge(std::size_t e) const;

    Graph delete_edge(std::size_t e) const;

    // Identifies the endpoints of e (keeping the smaller id), removes e and
    // renumbers vertices by ascending old id. Contracting a loop just
    // deletes it.
    Graph contract_edge(std::size_t e) const;

    // Degree counting multiplicity; a loop contributes 2.
    std::vector<std::size_t> degrees() const;

private:
    void check_edge(std::size_t e) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// 2-terminal gadget for inflation. s != t and the underlying graph is
// connected.
struct TwoTerminalGraph {
    Graph graph;
    std::size_t terminal_s = 0;
    std::size_t terminal_t = 0;

    TwoTerminalGraph() = default;
    TwoTerminalGraph(Graph g, std::size_t s, std::size_t t);
};

// Text format: first line "n m", then m lines "u v" or "u v a/b".
// Lines starting with '#' are comments. Missing weights default to 1.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace reliab
