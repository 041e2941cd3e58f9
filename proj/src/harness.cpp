#include "reliab/harness.hpp"

#include <algorithm>
#include <future>

#include <nlohmann/json.hpp>

namespace reliab {

namespace {

void require_simple_connected(const Graph& g, const char* who) {
    if (!g.is_connected())
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) throw std::invalid_argument(std::string(who) + ": graph must be simple (loop found)");
        auto key = std::minmax(e.u, e.v);
        seen.push_back({key.first, key.second});
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument(std::string(who) + ": graph must be simple (parallel edges found)");
}

Rational zrel_by_algo(const Graph& g, const EvalStrategy& strategy, const EvalCaps& caps) {
    switch (strategy.algo) {
        case Algo::brute_force: return zrel_brute(g, caps);
        case Algo::del_contr: return zrel_delcontr(g, true);
        case Algo::subset_dp: return zrel_subsetdp(g, caps);
    }
    throw std::logic_error("unreachable");
}

// Checks that `red` is g's topology with every weight equal to w_shift.
bool collapses_onto(const Graph& red, const Graph& g, const Rational& w_shift) {
    if (red.n() != g.n() || red.m() != g.m()) return false;
    auto pairs = [](const Graph& h) {
        std::vector<std::pair<std::size_t, std::size_t>> p;
        for (const Edge& e : h.edges()) {
            auto k = std::minmax(e.u, e.v);
            p.push_back({k.first, k.second});
        }
        std::sort(p.begin(), p.end());
        return p;
    };
    if (pairs(red) != pairs(g)) return false;
    for (const Edge& e : red.edges())
        if (e.weight != w_shift) return false;
    return true;
}

SequenceRecord run_sequence(const Graph& g, const BounceSeq& seq, const Rational& eval_w,
                            const Rational& shift_base, const LiftResult* lift,
                            const EvalStrategy& strategy, const EvalCaps& caps) {
    SequenceRecord rec;
    rec.seq = seq;
    TwoTerminalGraph bounce = bounce_graph(seq, eval_w);
    ShiftResult shift = bounce_shift(seq, shift_base);
    rec.shifted_weight = shift.new_weight;
    rec.prefactor = shift.prefactor;

    TwoTerminalGraph gadget = bounce;
    if (lift) {
        gadget = inflate_tt(bounce, lift->gadget);
        rec.prefactor *= pow_rational(lift->prefactor, static_cast<long>(bounce.graph.m()));
    }
    Graph inflated = inflate(g, gadget);
    rec.inflated_vertices = inflated.n();
    rec.inflated_edges = inflated.m();
    Rational total_factor = pow_rational(rec.prefactor, static_cast<long>(g.m()));

    if (strategy.sp_preprocess) {
        std::vector<std::size_t> host(g.n());
        for (std::size_t v = 0; v < g.n(); ++v) host[v] = v;
        auto [red, factor] = sp_reduce(inflated, host);
        if (!collapses_onto(red, g, rec.shifted_weight))
            throw std::logic_error("sp-collapse of inflation does not reproduce the host at w_S (sequence " +
                                   seq.str() + ")");
        if (factor != total_factor)
            throw std::logic_error("sp-collapse factor disagrees with C^m (sequence " + seq.str() + ")");
        rec.recovered = zrel_by_algo(red, strategy, caps);
        rec.evaluated = factor * rec.recovered;
    } else {
        rec.evaluated = zrel_subsetdp(inflated, caps);
        rec.recovered = rec.evaluated / total_factor;
    }
    return rec;
}

RecoveryReport recover_core(const Graph& g, const Rational& eval_w, const LiftResult* lift,
                            const EvalStrategy& strategy, const EvalCaps& caps,
                            const std::string& graph_id) {
    require_simple_connected(g, "recover_zrel_coeffs");
    if (!strategy.sp_preprocess && g.m() > 3)
        throw std::invalid_argument("blind mode supports hosts with at most 3 edges");
    Rational shift_base = lift ? lift->lifted_weight : eval_w;
    if (shift_base <= 6)
        throw std::domain_error("recovery requires an (effective) weight > 6; lift first");

    RecoveryReport report;
    report.graph_id = graph_id.empty() ? "graph" : graph_id;
    report.eval_weight = eval_w;
    report.lift_k = lift ? lift->k : 0;
    report.lifted_weight = shift_base;

    std::size_t m = g.m();
    std::vector<BounceSeq> family = bounce_family(m);

    // the m+1 evaluations are independent; assemble in sequence order
    std::vector<std::future<SequenceRecord>> futures;
    futures.reserve(family.size());
    for (const BounceSeq& seq : family)
        futures.push_back(std::async(std::launch::async, [&, seq] {
            return run_sequence(g, seq, eval_w, shift_base, lift, strategy, caps);
        }));
    for (auto& f : futures) report.records.push_back(f.get());

    std::vector<std::pair<Rational, Rational>> points;
    for (const SequenceRecord& rec : report.records) {
        for (const auto& pt : points)
            if (pt.first == rec.shifted_weight)
                throw std::runtime_error("duplicate shifted weight w_S = " +
                                         to_string(rec.shifted_weight) +
                                         "; bounce family ordering violated");
        points.push_back({rec.shifted_weight, rec.recovered});
    }
    report.zrel_poly = lagrange_interpolate(points, VarTag::w);

    if (m <= caps.brute_edges) {
        report.has_direct = true;
        report.direct_poly = zrel_coeffs_direct(g, caps);
        report.pass = report.zrel_poly == report.direct_poly;
    }
    return report;
}

}  // namespace

LiftResult lift_small_w(const Rational& w) {
    if (w <= 0 || w > 6)
        throw std::domain_error("lift_small_w requires 0 < w <= 6");
    LiftResult lift;
    Rational base = w / 2 + 1;
    Rational lifted = base - 1;  // (w/2+1)^k - 1
    lift.k = 0;
    do {
        ++lift.k;
        lifted = pow_rational(base, lift.k) - 1;
    } while (lifted <= 6);
    lift.lifted_weight = lifted;
    lift.prefactor = pow_rational(2 * w, lift.k);
    // bundle of k parallel 2-edge paths, terminals 0 and 1
    Graph gg(2 + lift.k);
    for (unsigned i = 0; i < lift.k; ++i) {
        gg.add_edge(0, 2 + i, w);
        gg.add_edge(2 + i, 1, w);
    }
    lift.gadget = TwoTerminalGraph(std::move(gg), 0, 1);
    return lift;
}

RecoveryReport recover_zrel_coeffs(const Graph& g, const Rational& w,
                                   const EvalStrategy& strategy, const EvalCaps& caps,
                                   const std::string& graph_id) {
    return recover_core(g, w, nullptr, strategy, caps, graph_id);
}

RecoveryReport recover_rel_coeffs(const Graph& g, const Rational& p,
                                  const EvalStrategy& strategy, const EvalCaps& caps,
                                  const std::string& graph_id) {
    if (p <= 0 || p >= 1) throw std::domain_error("recover_rel_coeffs requires 0 < p < 1");
    Rational w = Rational(1) / p - 1;
    RecoveryReport report;
    if (w > 6) {
        report = recover_core(g, w, nullptr, strategy, caps, graph_id);
    } else {
        LiftResult lift = lift_small_w(w);
        report = recover_core(g, w, &lift, strategy, caps, graph_id);
    }
    report.rel_poly = zpoly_to_relpoly(report.zrel_poly, g.m());
    report.has_rel_poly = true;
    return report;
}

std::string RecoveryReport::to_json() const {
    nlohmann::json j;
    j["graph"] = graph_id;
    j["eval_weight"] = to_string(eval_weight);
    j["lift_k"] = lift_k;
    j["lifted_weight"] = to_string(lifted_weight);
    j["sequences"] = nlohmann::json::array();
    for (const SequenceRecord& rec : records) {
        nlohmann::json r;
        r["sequence"] = rec.seq.str();
        r["w_S"] = to_string(rec.shifted_weight);
        r["C_S"] = to_string(rec.prefactor);
        r["inflated_vertices"] = rec.inflated_vertices;
        r["inflated_edges"] = rec.inflated_edges;
        r["evaluated"] = to_string(rec.evaluated);
        r["recovered"] = to_string(rec.recovered);
        j["sequences"].push_back(std::move(r));
    }
    j["zrel_coeffs"] = zrel_poly.str();
    if (has_rel_poly) j["rel_coeffs"] = rel_poly.str();
    if (has_direct) {
        j["direct_coeffs"] = direct_poly.str();
        j["verdict"] = pass ? "PASS" : "FAIL";
    } else {
        j["verdict"] = "UNVERIFIED";
    }
    return j.dump(2);
}

}  // namespace reliab
