#pragma once

#include <string>
#include <vector>

#include "reliab/evaluators.hpp"
#include "reliab/polynomial.hpp"
#include "reliab/transforms.hpp"

namespace reliab {

// One bounce inflation inside a coefficient recovery run.
struct SequenceRecord {
    BounceSeq seq;
    Rational shifted_weight;  // w_S, the abscissa this inflation contributes
    Rational prefactor;       // per-copy factor C; the evaluation divides by C^m
    std::size_t inflated_vertices = 0;
    std::size_t inflated_edges = 0;
    Rational evaluated;  // Z_rel of the inflated instance at the fixed weight
    Rational recovered;  // Z_rel(g; w_S)
};

struct RecoveryReport {
    std::string graph_id;
    Rational eval_weight;    // the single weight every evaluation uses
    unsigned lift_k = 0;     // 0 when no lift was needed
    Rational lifted_weight;  // > 6; equals eval_weight when lift_k == 0
    std::vector<SequenceRecord> records;
    UniPoly zrel_poly{VarTag::w};  // interpolated coefficients of Z_rel
    bool has_rel_poly = false;
    UniPoly rel_poly{VarTag::p};
    bool has_direct = false;
    UniPoly direct_poly{VarTag::w};
    bool pass = false;  // recovered == direct

    std::string to_json() const;
};

// Gadget lifting a weight 0 < w <= 6 above 6: a bundle of k parallel
// 2-edge paths (all edges at weight w) with k minimal such that
// (w/2 + 1)^k - 1 > 6. Its replacement weight is lifted_weight and its
// prefactor is (2w)^k.
struct LiftResult {
    unsigned k = 0;
    Rational lifted_weight;
    Rational prefactor;
    TwoTerminalGraph gadget;
};
LiftResult lift_small_w(const Rational& w);

// Recovers the coefficients of w -> Z_rel(G; w) using only evaluations at
// the fixed weight w > 6: one bounce inflation per interpolation point.
// With sp_preprocess (the default) each inflated instance is collapsed by
// sp_reduce back onto g's topology, and the collapsed weight/factor are
// checked against the analytic w_S and C^m. The blind mode (sp_preprocess
// off) evaluates the raw inflation by subset-DP and is limited to hosts
// with at most 3 edges.
RecoveryReport recover_zrel_coeffs(const Graph& g, const Rational& w,
                                   const EvalStrategy& strategy = {},
                                   const EvalCaps& caps = {},
                                   const std::string& graph_id = "");

// Full pipeline for the reliability polynomial at an arbitrary fixed
// 0 < p < 1: w = 1/p - 1, lifted through a (k,2)-bounce inflation when
// w <= 6, then bounce recovery and conversion to the p-basis.
RecoveryReport recover_rel_coeffs(const Graph& g, const Rational& p,
                                  const EvalStrategy& strategy = {},
                                  const EvalCaps& caps = {},
                                  const std::string& graph_id = "");

}  // namespace reliab
