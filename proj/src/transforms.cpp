#include "reliab/transforms.hpp"

#include <numeric>
#include <sstream>

namespace reliab {

BounceSeq::BounceSeq(std::vector<unsigned> e) : entries(std::move(e)) {
    if (entries.empty()) throw std::invalid_argument("empty bounce sequence");
    for (unsigned s : entries)
        if (s < 2) throw std::invalid_argument("bounce sequence entries must be >= 2");
}

std::size_t BounceSeq::edge_count() const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) total += (i + 1) * entries[i];
    return total;
}

std::string BounceSeq::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ',';
        out << entries[i];
    }
    return out.str();
}

BounceSeq BounceSeq::parse(const std::string& text) {
    std::vector<unsigned> entries;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        unsigned long v;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad bounce sequence entry: '" + tok + "'");
        }
        if (pos != tok.size() || v < 2 || v > 1000)
            throw std::invalid_argument("bad bounce sequence entry: '" + tok + "'");
        entries.push_back(static_cast<unsigned>(v));
    }
    return BounceSeq(std::move(entries));
}

Graph inflate(const Graph& g, const TwoTerminalGraph& h) {
    const Graph& hg = h.graph;
    std::size_t internal = hg.n() - 2;
    Graph out(g.n() + g.m() * internal);
    std::size_t next_fresh = g.n();
    for (const Edge& ge : g.edges()) {
        std::size_t s_img = std::min(ge.u, ge.v);
        std::size_t t_img = std::max(ge.u, ge.v);
        // map each copy vertex: terminals to the host endpoints, the rest
        // to fresh ids
        std::vector<std::size_t> vmap(hg.n());
        for (std::size_t x = 0; x < hg.n(); ++x) {
            if (x == h.terminal_s)
                vmap[x] = s_img;
            else if (x == h.terminal_t)
                vmap[x] = t_img;
            else
                vmap[x] = next_fresh++;
        }
        for (const Edge& he : hg.edges()) out.add_edge(vmap[he.u], vmap[he.v], he.weight);
    }
    return out;
}

TwoTerminalGraph inflate_tt(const TwoTerminalGraph& host, const TwoTerminalGraph& h) {
    return TwoTerminalGraph(inflate(host.graph, h), host.terminal_s, host.terminal_t);
}

TwoTerminalGraph bounce_graph(const BounceSeq& s, const Rational& edge_weight) {
    std::size_t k = s.length();
    std::size_t n = k + 1;
    for (std::size_t i = 0; i < k; ++i) n += (i + 1) * (s.entries[i] - 1);
    Graph g(n);
    std::size_t next_fresh = k + 1;  // junctions are 0..k
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t left = i, right = i + 1;
        std::size_t height = i + 1, len = s.entries[i];
        for (std::size_t path = 0; path < height; ++path) {
            std::size_t prev = left;
            for (std::size_t step = 0; step + 1 < len; ++step) {
                std::size_t mid = next_fresh++;
                g.add_edge(prev, mid, edge_weight);
                prev = mid;
            }
            g.add_edge(prev, right, edge_weight);
        }
    }
    return TwoTerminalGraph(std::move(g), 0, k);
}

ShiftResult stretch_shift(const std::vector<Rational>& weights) {
    if (weights.empty()) throw std::invalid_argument("empty path");
    Rational recip_sum(0), prod(1);
    for (const Rational& w : weights) {
        if (w == 0) throw std::invalid_argument("zero weight in path");
        recip_sum += Rational(1) / w;
        prod *= w;
    }
    if (recip_sum == 0) throw std::invalid_argument("undefined series shift: reciprocal sum is zero");
    Rational w_new = Rational(1) / recip_sum;
    return ShiftResult{w_new, recip_sum * prod};
}

ShiftResult thicken_shift(const std::vector<Rational>& weights) {
    Rational prod(1);
    for (const Rational& w : weights) prod *= 1 + w;
    return ShiftResult{prod - 1, Rational(1)};
}

ShiftResult bounce_shift(const BounceSeq& s, const Rational& w) {
    if (w <= 0) throw std::domain_error("bounce_shift requires w > 0");
    Rational recip_sum(0);
    Rational prod(1);
    for (std::size_t idx = 0; idx < s.length(); ++idx) {
        long i = static_cast<long>(idx) + 1;
        Rational si(s.entries[idx]);
        recip_sum += Rational(1) / (pow_rational(1 + w / si, i) - 1);
        prod *= pow_rational(w, (s.entries[idx] - 1) * i) *
                (pow_rational(w + si, i) - pow_rational(si, i));
    }
    Rational w_s = Rational(1) / recip_sum;
    return ShiftResult{w_s, recip_sum * prod};
}

ShiftResult two_terminal_shift(const TwoTerminalGraph& h, const EvalCaps& caps) {
    const Graph& g = h.graph;
    std::size_t m = g.m();
    if (m > caps.brute_edges)
        throw CapExceededError("two_terminal_shift: gadget has " + std::to_string(m) +
                               " edges, cap is " + std::to_string(caps.brute_edges));
    Rational conn(0), cut(0);
    std::vector<std::size_t> parent(g.n());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        std::size_t comps = g.n();
        Rational weight(1);
        for (std::size_t e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            const Edge& ed = g.edge(e);
            weight *= ed.weight;
            std::size_t a = find(ed.u), b = find(ed.v);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        if (comps == 1) {
            conn += weight;
        } else if (comps == 2 && find(h.terminal_s) != find(h.terminal_t)) {
            cut += weight;
        }
    }
    if (cut == 0) throw std::domain_error("two_terminal_shift undefined: cut weight is zero");
    return ShiftResult{conn / cut, cut};
}

std::vector<BounceSeq> bounce_family(std::size_t m) {
    if (m < 1) throw std::invalid_argument("bounce_family requires m >= 1");
    std::size_t l = 1;
    while ((std::size_t{1} << l) < m + 1) ++l;
    std::vector<BounceSeq> family;
    family.reserve(m + 1);
    for (std::size_t code = 0; code <= m; ++code) {
        std::vector<unsigned> entries(l);
        for (std::size_t i = 0; i < l; ++i)
            entries[i] = (code >> (l - 1 - i) & 1) ? 3u : 2u;
        family.emplace_back(std::move(entries));
    }
    return family;
}

ShiftResult mv_parallel_shift(const Rational& /*q*/, const std::vector<Rational>& weights) {
    return thicken_shift(weights);
}

ShiftResult mv_series_shift(const Rational& q, const std::vector<Rational>& weights) {
    if (q == 0) return stretch_shift(weights);
    if (weights.empty()) throw std::invalid_argument("empty path");
    Rational prod_shift(1), prod_w(1);
    for (const Rational& w : weights) {
        if (w == 0) throw std::invalid_argument("zero weight in path");
        prod_shift *= 1 + q / w;
        prod_w *= w;
    }
    Rational denom = prod_shift - 1;
    if (denom == 0) throw std::invalid_argument("undefined series shift at this q");
    Rational w_new = q / denom;
    return ShiftResult{w_new, prod_w / w_new};
}

MvBounceResult mv_bounce_shift(const BounceSeq& s, const Rational& q, const Rational& w) {
    if (w == 0) throw std::domain_error("mv_bounce_shift requires w != 0");
    if (q == 0 || q == -2 * w)
        throw std::domain_error("mv_bounce_shift: q in excluded set {0, -2w}");

    // Ground truth: reduce each bounce by series then parallel rules,
    // then the bounce chain by one final series rule.
    std::vector<Rational> chain;
    Rational prefactor(1);
    for (std::size_t idx = 0; idx < s.length(); ++idx) {
        std::size_t height = idx + 1;
        auto path = mv_series_shift(q, std::vector<Rational>(s.entries[idx], w));
        auto par = mv_parallel_shift(q, std::vector<Rational>(height, path.new_weight));
        chain.push_back(par.new_weight);
        prefactor *= pow_rational(path.prefactor, static_cast<long>(height)) * par.prefactor;
    }
    auto fin = mv_series_shift(q, chain);
    prefactor *= fin.prefactor;

    MvBounceResult result;
    result.shifted_weight = fin.new_weight;
    result.prefactor = prefactor;

    // The printed closed form places the -1 terms inside the product:
    //   q/w_S = prod_i ( q/((q/r_i + 1)^i - 1) - 1 ),  r_i = (1+q/w)^{s_i} - 1
    result.closed_form_defined = true;
    Rational prod(1);
    for (std::size_t idx = 0; idx < s.length(); ++idx) {
        long i = static_cast<long>(idx) + 1;
        Rational r = pow_rational(1 + q / w, static_cast<long>(s.entries[idx])) - 1;
        if (r == 0) {
            result.closed_form_defined = false;
            break;
        }
        Rational x = pow_rational(q / r + 1, i) - 1;
        if (x == 0) {
            result.closed_form_defined = false;
            break;
        }
        prod *= q / x - 1;
    }
    if (result.closed_form_defined && prod != 0) {
        result.closed_form_weight = q / prod;
        result.closed_form_agrees = result.closed_form_weight == result.shifted_weight;
    } else {
        result.closed_form_defined = false;
    }
    return result;
}

}  // namespace reliab
