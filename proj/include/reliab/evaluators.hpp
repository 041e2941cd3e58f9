#pragma once

#include <utility>
#include <vector>

#include "reliab/graph.hpp"
#include "reliab/polynomial.hpp"

namespace reliab {

// Resource limit exceeded (distinct from bad input so callers can map it
// to a different exit code).
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caps keeping the exponential evaluators at desk scale. Configuration,
// not constants: callers may raise them.
struct EvalCaps {
    std::size_t brute_edges = 24;     // 2^m subset enumeration
    std::size_t subsetdp_vertices = 20;  // 3^n vertex-subset DP
};

enum class Algo { brute_force, del_contr, subset_dp };

struct EvalStrategy {
    Algo algo = Algo::del_contr;
    bool sp_preprocess = true;
};

// Z_rel(G; w) = sum over connected spanning edge subsets of the edge-weight
// product, by direct 2^m enumeration.
Rational zrel_brute(const Graph& g, const EvalCaps& caps = {});

// Sokal partition function Z(G; q, w) = sum_A w(A) q^kappa(A).
Rational ztut_brute(const Graph& g, const Rational& q, const EvalCaps& caps = {});

// Z0 = Z/q; at q = 0 this is Z_rel (the graph must be connected there).
Rational znul(const Graph& g, const Rational& q, const EvalStrategy& strategy = {},
              const EvalCaps& caps = {});

// Tutte polynomial T(G; x, y) by subset expansion, with 0^0 = 1.
Rational tutte_brute(const Graph& g, const Rational& x, const Rational& y,
                     const EvalCaps& caps = {});

// All-terminal reliability R(G; p). Stored edge weights are ignored: every
// edge fails with probability p.
Rational rel_point(const Graph& g, const Rational& p, const EvalStrategy& strategy = {},
                   const EvalCaps& caps = {});

// Reliability with an individual failure probability per edge.
Rational rel_individual(const Graph& g, const std::vector<Rational>& failure_probs,
                        const EvalCaps& caps = {});

// Z_rel by deletion/contraction, optionally interleaved with
// series-parallel reduction.
Rational zrel_delcontr(const Graph& g, bool use_sp = true);

// Z0(G; q, w) by deletion/contraction; valid for every rational q
// including 0.
Rational znul_delcontr(const Graph& g, const Rational& q);

// Applies parallel-bundle and series-path rewrites until neither fires,
// accumulating the multiplicative prefactor: Z_rel(g) = factor *
// Z_rel(reduced). Vertices listed in `keep` are never eliminated by a
// series step; n >= 2 is preserved regardless.
std::pair<Graph, Rational> sp_reduce(const Graph& g,
                                     const std::vector<std::size_t>& keep = {});

// Z_rel via the 3^n vertex-subset recurrence: for each vertex set W
// containing the root, the connected-subset weight c(W) satisfies
//   c(W) = f(W) - sum over proper root-containing U of c(U) * f(W \ U),
// where f(X) multiplies (1 + w_e) over edges inside X.
Rational zrel_subsetdp(const Graph& g, const EvalCaps& caps = {});

// Coefficients of w -> Z_rel(G; w) for unit weights: coefficient j counts
// connected spanning subsets of size j.
UniPoly zrel_coeffs_direct(const Graph& g, const EvalCaps& caps = {});

// Number of spanning trees via the matrix-tree theorem (exact fraction-free
// elimination on a Laplacian cofactor).
Integer spanning_trees(const Graph& g);

// Number of connected spanning edge subsets (= 2^m R(G;1/2) = Z_rel at
// unit weights).
Integer count_connected_spanning(const Graph& g);

}  // namespace reliab
