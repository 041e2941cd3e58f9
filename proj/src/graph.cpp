#include "reliab/graph.hpp"

#include <numeric>
#include <sstream>

namespace reliab {

namespace {

// Small union-find, path halving + size.
struct DisjointSet {
    std::vector<std::size_t> parent;
    std::size_t components;

    explicit DisjointSet(std::size_t n) : parent(n), components(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent[a] = b;
        --components;
    }
};

}  // namespace

const Edge& Graph::edge(std::size_t e) const {
    check_edge(e);
    return edges_[e];
}

void Graph::check_edge(std::size_t e) const {
    if (e >= edges_.size()) throw std::out_of_range("invalid edge id");
}

void Graph::add_edge(std::size_t u, std::size_t v, Rational w) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    edges_.push_back(Edge{u, v, std::move(w)});
}

Graph Graph::with_constant_weight(const Rational& w) const {
    Graph g(n_);
    for (const Edge& e : edges_) g.add_edge(e.u, e.v, w);
    return g;
}

std::size_t Graph::kappa(const std::vector<std::size_t>& edge_subset) const {
    DisjointSet ds(n_);
    for (std::size_t e : edge_subset) {
        check_edge(e);
        ds.unite(edges_[e].u, edges_[e].v);
    }
    return ds.components;
}

std::size_t Graph::kappa_mask(std::uint64_t subset) const {
    DisjointSet ds(n_);
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (subset >> e & 1) ds.unite(edges_[e].u, edges_[e].v);
    return ds.components;
}

std::size_t Graph::kappa_all() const {
    DisjointSet ds(n_);
    for (const Edge& e : edges_) ds.unite(e.u, e.v);
    return ds.components;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    return kappa_all() == 1;
}

bool Graph::is_bridge(std::size_t e) const {
    check_edge(e);
    if (edges_[e].is_loop()) return false;
    DisjointSet ds(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (i != e) ds.unite(edges_[i].u, edges_[i].v);
    return ds.components > kappa_all();
}

Graph Graph::delete_edge(std::size_t e) const {
    check_edge(e);
    Graph g(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (i != e) g.edges_.push_back(edges_[i]);
    return g;
}

Graph Graph::contract_edge(std::size_t e) const {
    check_edge(e);
    const Edge& ce = edges_[e];
    if (ce.is_loop()) return delete_edge(e);
    std::size_t keep = std::min(ce.u, ce.v);
    std::size_t drop = std::max(ce.u, ce.v);
    auto remap = [&](std::size_t x) {
        if (x == drop) return keep;
        return x > drop ? x - 1 : x;
    };
    Graph g(n_ - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i == e) continue;
        g.edges_.push_back(Edge{remap(edges_[i].u), remap(edges_[i].v), edges_[i].weight});
    }
    return g;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

TwoTerminalGraph::TwoTerminalGraph(Graph g, std::size_t s, std::size_t t)
    : graph(std::move(g)), terminal_s(s), terminal_t(t) {
    if (s == t) throw std::invalid_argument("terminals must be distinct");
    if (s >= graph.n() || t >= graph.n())
        throw std::out_of_range("terminal out of range");
    if (!graph.is_connected())
        throw std::invalid_argument("2-terminal gadget must be connected");
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    Graph g;
    std::size_t edges_read = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and blank lines
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            long long nn, mm;
            if (!(ls >> nn >> mm) || nn < 0 || mm < 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad header");
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            g = Graph(n);
            have_header = true;
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("line " + std::to_string(lineno) + ": malformed edge");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": vertex id out of range");
        std::string wtok;
        Rational w(1);
        if (ls >> wtok) w = parse_rational(wtok);
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), w);
        ++edges_read;
    }
    if (!have_header) throw std::invalid_argument("empty graph file");
    if (edges_read != m)
        throw std::invalid_argument("edge count mismatch: header says " + std::to_string(m) +
                                    ", file has " + std::to_string(edges_read));
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (e.weight != 1)
            out << ' ' << numerator(e.weight) << '/' << denominator(e.weight);
        out << '\n';
    }
    return out.str();
}

}  // namespace reliab
