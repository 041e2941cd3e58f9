#pragma once

// Shared graph builders and corpora for the test suites.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "reliab/graph.hpp"

namespace reliab::testing {

inline Graph k2() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

inline Graph k3() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    return g;
}

inline Graph k4() {
    Graph g(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) g.add_edge(i, j);
    return g;
}

inline Graph c5() {
    Graph g(5);
    for (std::size_t i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    return g;
}

// triangle {0,1,2} with pendant vertices 3 and 4 hanging off vertex 0
inline Graph pendant_triangle() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(0, 3);
    g.add_edge(0, 4);
    return g;
}

inline Graph path_graph(const std::vector<Rational>& weights) {
    Graph g(weights.size() + 1);
    for (std::size_t i = 0; i < weights.size(); ++i) g.add_edge(i, i + 1, weights[i]);
    return g;
}

inline Graph star(std::size_t leaves, const Rational& w = Rational(1)) {
    Graph g(leaves + 1);
    for (std::size_t i = 0; i < leaves; ++i) g.add_edge(0, i + 1, w);
    return g;
}

// Canonical form of a simple labeled graph: minimum edge-pair bitmask over
// all vertex permutations. Small n only.
inline std::uint64_t canonical_code(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    auto pair_bit = [n](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        return a * n + b;
    };
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : edges) code |= std::uint64_t{1} << pair_bit(perm[u], perm[v]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All connected simple graphs with n_min <= n <= n_max, one labeled
// representative per isomorphism class.
inline std::vector<Graph> connected_simple_corpus(std::size_t n_min, std::size_t n_max) {
    std::vector<Graph> out;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> all_pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) all_pairs.push_back({i, j});
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all_pairs.size()); ++mask) {
            std::vector<std::pair<std::size_t, std::size_t>> edges;
            for (std::size_t b = 0; b < all_pairs.size(); ++b)
                if (mask >> b & 1) edges.push_back(all_pairs[b]);
            Graph g(n);
            for (auto [u, v] : edges) g.add_edge(u, v);
            if (!g.is_connected()) continue;
            if (!seen.insert(canonical_code(n, edges)).second) continue;
            out.push_back(std::move(g));
        }
    }
    return out;
}

// Random connected weighted multigraphs (n <= 6, m <= 9, small positive
// rational weights). Deterministic for a given seed.
inline std::vector<Graph> random_multigraph_corpus(std::size_t count, unsigned seed = 20101213) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    while (out.size() < count) {
        std::uniform_int_distribution<std::size_t> nd(2, 6);
        std::size_t n = nd(rng);
        std::uniform_int_distribution<std::size_t> md(n - 1, 9);
        std::size_t m = md(rng);
        if (m < n - 1) continue;
        Graph g(n);
        std::uniform_int_distribution<std::size_t> vd(0, n - 1);
        std::uniform_int_distribution<int> num(1, 5), den(1, 4);
        for (std::size_t e = 0; e < m; ++e)
            g.add_edge(vd(rng), vd(rng), Rational(num(rng), den(rng)));
        if (!g.is_connected()) continue;
        out.push_back(std::move(g));
    }
    return out;
}

// Random positive rationals in (0,1), useful as probabilities.
inline Rational random_probability(std::mt19937& rng) {
    std::uniform_int_distribution<int> den(2, 17);
    int d = den(rng);
    std::uniform_int_distribution<int> num(1, d - 1);
    return Rational(num(rng), d);
}

}  // namespace reliab::testing
