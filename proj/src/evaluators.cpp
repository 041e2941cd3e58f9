#include "reliab/evaluators.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "reliab/transforms.hpp"

namespace reliab {

namespace {

void require_connected(const Graph& g, const char* who) {
    if (!g.is_connected())
        throw std::invalid_argument(std::string(who) + ": graph must be connected");
}

void check_brute_cap(const Graph& g, const EvalCaps& caps, const char* who) {
    if (g.m() > caps.brute_edges)
        throw CapExceededError(std::string(who) + ": " + std::to_string(g.m()) +
                               " edges exceeds brute-force cap " +
                               std::to_string(caps.brute_edges));
}

Rational subset_weight(const Graph& g, std::uint64_t mask) {
    Rational w(1);
    for (std::size_t e = 0; e < g.m(); ++e)
        if (mask >> e & 1) w *= g.edge(e).weight;
    return w;
}

}  // namespace

Rational zrel_brute(const Graph& g, const EvalCaps& caps) {
    require_connected(g, "zrel_brute");
    check_brute_cap(g, caps, "zrel_brute");
    Rational total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask)
        if (g.kappa_mask(mask) == 1) total += subset_weight(g, mask);
    return total;
}

Rational ztut_brute(const Graph& g, const Rational& q, const EvalCaps& caps) {
    check_brute_cap(g, caps, "ztut_brute");
    Rational total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask)
        total += subset_weight(g, mask) *
                 pow_rational(q, static_cast<long>(g.kappa_mask(mask)));
    return total;
}

Rational tutte_brute(const Graph& g, const Rational& x, const Rational& y,
                     const EvalCaps& caps) {
    require_connected(g, "tutte_brute");
    check_brute_cap(g, caps, "tutte_brute");
    Rational total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
        std::size_t kap = g.kappa_mask(mask);
        long sz = static_cast<long>(std::popcount(mask));
        // both exponents are nonnegative for connected g; 0^0 = 1
        total += pow_rational(x - 1, static_cast<long>(kap) - 1) *
                 pow_rational(y - 1, static_cast<long>(kap) + sz - static_cast<long>(g.n()));
    }
    return total;
}

Rational znul(const Graph& g, const Rational& q, const EvalStrategy& strategy,
              const EvalCaps& caps) {
    if (q == 0) {
        require_connected(g, "znul");
        switch (strategy.algo) {
            case Algo::brute_force: return zrel_brute(g, caps);
            case Algo::del_contr: return zrel_delcontr(g, strategy.sp_preprocess);
            case Algo::subset_dp: return zrel_subsetdp(g, caps);
        }
    }
    if (strategy.algo == Algo::brute_force) return ztut_brute(g, q, caps) / q;
    return znul_delcontr(g, q);
}

Rational rel_point(const Graph& g, const Rational& p, const EvalStrategy& strategy,
                   const EvalCaps& caps) {
    if (p < 0 || p > 1) throw std::domain_error("rel_point: p must be in [0,1]");
    require_connected(g, "rel_point");
    if (p == 0) return Rational(1);
    if (p == 1) return Rational(0);
    Graph h = g.with_constant_weight(Rational(1) / p - 1);
    return pow_rational(p, static_cast<long>(g.m())) * znul(h, Rational(0), strategy, caps);
}

Rational rel_individual(const Graph& g, const std::vector<Rational>& failure_probs,
                        const EvalCaps& caps) {
    require_connected(g, "rel_individual");
    if (failure_probs.size() != g.m())
        throw std::invalid_argument("rel_individual: need one probability per edge");
    for (const Rational& p : failure_probs)
        if (p < 0 || p > 1) throw std::domain_error("rel_individual: probability outside [0,1]");
    check_brute_cap(g, caps, "rel_individual");
    Rational total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask) {
        if (g.kappa_mask(mask) != 1) continue;
        Rational w(1);
        for (std::size_t e = 0; e < g.m(); ++e)
            w *= (mask >> e & 1) ? 1 - failure_probs[e] : failure_probs[e];
        total += w;
    }
    return total;
}

namespace {

Rational zrel_dc_rec(const Graph& g, bool use_sp) {
    if (g.m() == 0) return g.n() == 1 ? Rational(1) : Rational(0);
    if (g.n() == 1) {
        // only loops left
        Rational r(1);
        for (const Edge& e : g.edges()) r *= 1 + e.weight;
        return r;
    }
    Graph cur = g;
    Rational pre(1);
    if (use_sp) {
        auto [red, factor] = sp_reduce(g);
        cur = std::move(red);
        pre = std::move(factor);
        if (cur.m() == 0) return pre * (cur.n() == 1 ? 1 : 0);
    }
    // highest-id non-bridge edge first; only bridges left means a tree
    for (std::size_t e = cur.m(); e-- > 0;) {
        if (!cur.is_bridge(e)) {
            const Rational w = cur.edge(e).weight;
            return pre * (zrel_dc_rec(cur.delete_edge(e), use_sp) +
                          w * zrel_dc_rec(cur.contract_edge(e), use_sp));
        }
    }
    Rational r(1);
    for (const Edge& e : cur.edges()) r *= e.weight;
    return pre * r;
}

// Z0 normalized by q^kappa; base value 1 on edgeless graphs. For
// connected input this equals Z/q, and at q = 0 it is Z_rel.
Rational znul_dc_rec(const Graph& g, const Rational& q) {
    if (g.m() == 0) return Rational(1);
    for (std::size_t e = g.m(); e-- > 0;) {
        if (!g.is_bridge(e)) {
            const Rational w = g.edge(e).weight;
            return znul_dc_rec(g.delete_edge(e), q) + w * znul_dc_rec(g.contract_edge(e), q);
        }
    }
    // all edges are bridges
    std::size_t e = g.m() - 1;
    const Rational w = g.edge(e).weight;
    return q * znul_dc_rec(g.delete_edge(e), q) + w * znul_dc_rec(g.contract_edge(e), q);
}

}  // namespace

Rational zrel_delcontr(const Graph& g, bool use_sp) {
    require_connected(g, "zrel_delcontr");
    return zrel_dc_rec(g, use_sp);
}

Rational znul_delcontr(const Graph& g, const Rational& q) {
    require_connected(g, "znul_delcontr");
    return znul_dc_rec(g, q);
}

std::pair<Graph, Rational> sp_reduce(const Graph& g, const std::vector<std::size_t>& keep) {
    if (g.n() < 2) throw std::invalid_argument("sp_reduce: need n >= 2");
    std::vector<char> locked(g.n(), 0);
    for (std::size_t v : keep) {
        if (v >= g.n()) throw std::out_of_range("sp_reduce: keep vertex out of range");
        locked[v] = 1;
    }
    Graph cur = g;
    Rational factor(1);
    bool changed = true;
    while (changed) {
        changed = false;

        // loops contribute an independent factor (1 + w)
        {
            Graph next(cur.n());
            for (const Edge& e : cur.edges()) {
                if (e.is_loop()) {
                    factor *= 1 + e.weight;
                    changed = true;
                } else {
                    next.add_edge(e.u, e.v, e.weight);
                }
            }
            if (changed) cur = std::move(next);
        }

        // merge parallel bundles (keyed by endpoint pair, order of first
        // occurrence)
        {
            std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> bundles;
            std::vector<std::pair<std::size_t, std::size_t>> order;
            for (const Edge& e : cur.edges()) {
                auto key = std::minmax(e.u, e.v);
                auto [it, inserted] = bundles.try_emplace({key.first, key.second});
                if (inserted) order.push_back({key.first, key.second});
                it->second.push_back(e.weight);
            }
            if (order.size() < cur.m()) {
                Graph next(cur.n());
                for (const auto& key : order) {
                    const auto& ws = bundles[key];
                    Rational w = ws.size() == 1 ? ws[0] : thicken_shift(ws).new_weight;
                    next.add_edge(key.first, key.second, w);
                }
                cur = std::move(next);
                changed = true;
            }
        }

        // eliminate one unlocked degree-2 vertex (series rule)
        if (cur.n() > 2) {
            std::vector<std::vector<std::size_t>> incident(cur.n());
            for (std::size_t e = 0; e < cur.m(); ++e) {
                incident[cur.edge(e).u].push_back(e);
                incident[cur.edge(e).v].push_back(e);
            }
            for (std::size_t v = 0; v < cur.n(); ++v) {
                if (locked[v] || incident[v].size() != 2) continue;
                std::size_t e1 = incident[v][0], e2 = incident[v][1];
                if (e1 == e2) continue;  // loop, handled above
                const Edge& a = cur.edge(e1);
                const Edge& b = cur.edge(e2);
                ShiftResult shift;
                try {
                    shift = stretch_shift({a.weight, b.weight});
                } catch (const std::invalid_argument&) {
                    continue;  // shift undefined for these weights
                }
                std::size_t na = a.u == v ? a.v : a.u;
                std::size_t nb = b.u == v ? b.v : b.u;
                auto remap = [&](std::size_t x) { return x > v ? x - 1 : x; };
                Graph next(cur.n() - 1);
                for (std::size_t e = 0; e < cur.m(); ++e) {
                    if (e == e1 || e == e2) continue;
                    next.add_edge(remap(cur.edge(e).u), remap(cur.edge(e).v), cur.edge(e).weight);
                }
                next.add_edge(remap(na), remap(nb), shift.new_weight);
                factor *= shift.prefactor;
                locked.erase(locked.begin() + static_cast<std::ptrdiff_t>(v));
                cur = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return {std::move(cur), std::move(factor)};
}

Rational zrel_subsetdp(const Graph& g, const EvalCaps& caps) {
    require_connected(g, "zrel_subsetdp");
    std::size_t n = g.n();
    if (n > caps.subsetdp_vertices)
        throw CapExceededError("zrel_subsetdp: " + std::to_string(n) +
                               " vertices exceeds cap " +
                               std::to_string(caps.subsetdp_vertices));
    if (n == 1) {
        Rational r(1);
        for (const Edge& e : g.edges()) r *= 1 + e.weight;  // loops
        return r;
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;

    // f[X] = product of (1 + w_e) over edges with both endpoints in X
    std::vector<Rational> f(full + 1);
    f[0] = 1;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        std::size_t v = static_cast<std::size_t>(std::countr_zero(mask));
        Rational val = f[mask & (mask - 1)];
        for (const Edge& e : g.edges()) {
            std::size_t other;
            if (e.u == v)
                other = e.v;
            else if (e.v == v)
                other = e.u;
            else
                continue;
            if (mask >> other & 1) val *= 1 + e.weight;
        }
        f[mask] = std::move(val);
    }

    // c[W] for root-containing W; root is vertex 0
    std::vector<Rational> c(full + 1);
    for (std::uint64_t w = 1; w <= full; w += 2) {
        Rational val = f[w];
        for (std::uint64_t u = (w - 1) & w; u; u = (u - 1) & w)
            if (u & 1) val -= c[u] * f[w ^ u];
        c[w] = std::move(val);
    }
    return c[full];
}

UniPoly zrel_coeffs_direct(const Graph& g, const EvalCaps& caps) {
    require_connected(g, "zrel_coeffs_direct");
    check_brute_cap(g, caps, "zrel_coeffs_direct");
    std::vector<Rational> coeffs(g.m() + 1, Rational(0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.m()); ++mask)
        if (g.kappa_mask(mask) == 1) coeffs[std::popcount(mask)] += 1;
    return UniPoly(std::move(coeffs), VarTag::w);
}

Integer spanning_trees(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("spanning_trees: empty graph");
    std::size_t n = g.n();
    if (n == 1) return 1;
    // Laplacian cofactor (row/column 0 removed); loops do not contribute
    std::size_t d = n - 1;
    std::vector<std::vector<Integer>> a(d, std::vector<Integer>(d, 0));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        if (e.u > 0) a[e.u - 1][e.u - 1] += 1;
        if (e.v > 0) a[e.v - 1][e.v - 1] += 1;
        if (e.u > 0 && e.v > 0) {
            a[e.u - 1][e.v - 1] -= 1;
            a[e.v - 1][e.u - 1] -= 1;
        }
    }
    // Bareiss fraction-free elimination
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < d; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < d && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == d) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < d; ++i)
            for (std::size_t j = k + 1; j < d; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[d - 1][d - 1] : -a[d - 1][d - 1];
}

Integer count_connected_spanning(const Graph& g) {
    require_connected(g, "count_connected_spanning");
    Rational z = zrel_delcontr(g.with_constant_weight(Rational(1)));
    return numerator(z);  // denominator is 1 at unit weights
}

}  // namespace reliab
