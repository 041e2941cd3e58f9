#pragma once

#include <vector>

#include "reliab/evaluators.hpp"
#include "reliab/graph.hpp"

namespace reliab {

// Bounce sequence <s_1,...,s_k>, every entry >= 2 so the bounce graph is
// simple.
struct BounceSeq {
    std::vector<unsigned> entries;

    BounceSeq() = default;
    explicit BounceSeq(std::vector<unsigned> e);

    std::size_t length() const { return entries.size(); }
    // Sum of i * s_i, the edge count of the bounce graph.
    std::size_t edge_count() const;

    bool operator==(const BounceSeq& o) const = default;
    std::string str() const;  // "3,2,3,2"
    static BounceSeq parse(const std::string& text);
};

// Replacement weight w' and multiplicative prefactor C of a gadget
// replacement: Z_rel(transformed) = C * Z_rel(original with e -> w').
// For whole-graph inflations the factor is C^m.
struct ShiftResult {
    Rational new_weight;
    Rational prefactor;
};

// Replaces every edge xy of g by a fresh copy of h, identifying h's s-
// terminal with min(x,y) and the t-terminal with max(x,y). Host vertices
// keep their ids; internal copy vertices are appended in edge order.
Graph inflate(const Graph& g, const TwoTerminalGraph& h);

// Inflation of a 2-terminal host; the terminals carry over.
TwoTerminalGraph inflate_tt(const TwoTerminalGraph& host, const TwoTerminalGraph& h);

// The bounce graph of S: a chain of k bounces, the i-th being i parallel
// paths of s_i edges. Terminals are the two ends of the chain. All edges
// get edge_weight.
TwoTerminalGraph bounce_graph(const BounceSeq& s, const Rational& edge_weight = Rational(1));

// Path replacement (series rule): 1/w' = sum 1/w_i, C = (1/w') prod w_i.
ShiftResult stretch_shift(const std::vector<Rational>& weights);

// Parallel-bundle replacement: w' = -1 + prod (1 + w_i), C = 1.
ShiftResult thicken_shift(const std::vector<Rational>& weights);

// Weight shift of a bounce inflation at constant weight w > 0:
//   1/w_S = sum_i 1/((1 + w/s_i)^i - 1)
//   C_S   = (1/w_S) prod_i w^((s_i-1) i) ((w + s_i)^i - s_i^i)
ShiftResult bounce_shift(const BounceSeq& s, const Rational& w);

// Universal shift oracle: classifies all edge subsets F of h into those
// that already connect the terminals (weight Sigma_conn) and those that
// need the st-edge (kappa(F) = 2 with s, t separated; weight Sigma_cut).
// Returns (Sigma_conn / Sigma_cut, Sigma_cut).
ShiftResult two_terminal_shift(const TwoTerminalGraph& h, const EvalCaps& caps = {});

// The lexicographically first m+1 sequences over {2,3} of length
// ceil(log2(m+1)). Their shifted weights are pairwise distinct and
// reverse-lexicographically ordered for every w > 6.
std::vector<BounceSeq> bounce_family(std::size_t m);

// Series/parallel rules for Z0 at general q. Parallel is q-independent;
// series at q = 0 delegates to stretch_shift.
ShiftResult mv_parallel_shift(const Rational& q, const std::vector<Rational>& weights);
ShiftResult mv_series_shift(const Rational& q, const std::vector<Rational>& weights);

// Bounce weight shift for Z0 at general q. The composed series/parallel
// value is ground truth; the closed-form variant (with the minus-one terms
// placed inside the product) is evaluated alongside and compared.
struct MvBounceResult {
    Rational shifted_weight;  // from series/parallel composition
    Rational prefactor;
    bool closed_form_defined = false;
    Rational closed_form_weight;
    bool closed_form_agrees = false;
};
MvBounceResult mv_bounce_shift(const BounceSeq& s, const Rational& q, const Rational& w);

}  // namespace reliab
