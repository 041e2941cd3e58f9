#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reliab/evaluators.hpp"
#include "reliab/harness.hpp"
#include "reliab/transforms.hpp"

using namespace reliab;

namespace {

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

EvalCaps caps_from_env() {
    EvalCaps caps;
    if (const char* cap = std::getenv("RELIAB_BRUTE_CAP"))
        caps.brute_edges = static_cast<std::size_t>(std::stoul(cap));
    return caps;
}

EvalStrategy parse_strategy(const std::string& name, bool no_sp) {
    EvalStrategy s;
    if (name == "brute")
        s.algo = Algo::brute_force;
    else if (name == "dc")
        s.algo = Algo::del_contr;
    else if (name == "dp")
        s.algo = Algo::subset_dp;
    else
        throw std::invalid_argument("unknown strategy '" + name + "' (want brute|dc|dp)");
    s.sp_preprocess = !no_sp;
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact all-terminal reliability and Tutte/reliability polynomial toolkit"};
    app.require_subcommand(1);
    app.footer("Rational arguments use the form a/b (or a plain integer).\n"
               "Polynomial output lists coefficients lowest degree first.\n"
               "RELIAB_BRUTE_CAP overrides the brute-force edge cap (default 24).");

    std::string graph_file, out_file, basis = "p", strategy_name = "dc", bounce_list, p_str, w_str = "7";
    unsigned stretch_k = 0, thicken_k = 0;
    std::size_t family_m = 0;
    bool no_sp = false;

    auto* eval = app.add_subcommand("eval", "Reliability R(G;p) at a fixed failure probability");
    eval->add_option("-g,--graph", graph_file, "graph file")->required();
    eval->add_option("-p,--prob", p_str, "failure probability in [0,1]")->required();
    eval->add_option("--strategy", strategy_name, "brute|dc|dp (default dc)");
    eval->add_flag("--no-sp", no_sp, "disable series-parallel preprocessing");

    auto* evalw = app.add_subcommand(
        "eval-weighted", "Reliability with the weight column read as per-edge failure probabilities");
    evalw->add_option("-g,--graph", graph_file, "graph file")->required();

    auto* coeffs = app.add_subcommand("coeffs", "Coefficients of the reliability polynomial");
    coeffs->add_option("-g,--graph", graph_file, "graph file")->required();
    coeffs->add_option("--basis", basis, "w or p (default p)");

    auto* count = app.add_subcommand("count", "Number of connected spanning subgraphs");
    count->add_option("-g,--graph", graph_file, "graph file")->required();

    auto* trees = app.add_subcommand("trees", "Number of spanning trees");
    trees->add_option("-g,--graph", graph_file, "graph file")->required();

    auto* inflate_cmd = app.add_subcommand("inflate", "Write a gadget inflation of the graph");
    inflate_cmd->add_option("-g,--graph", graph_file, "graph file")->required();
    inflate_cmd->add_option("-o,--out", out_file, "output graph file")->required();
    auto* opt_bounce = inflate_cmd->add_option("--bounce", bounce_list, "bounce sequence, e.g. 3,2,3,2");
    auto* opt_stretch = inflate_cmd->add_option("--stretch", stretch_k, "k-stretch");
    auto* opt_thicken = inflate_cmd->add_option("--thicken", thicken_k, "k-thickening");
    opt_bounce->excludes(opt_stretch)->excludes(opt_thicken);
    opt_stretch->excludes(opt_thicken);

    auto* shift = app.add_subcommand("shift", "Weight shift of a bounce inflation");
    shift->add_option("--bounce", bounce_list, "bounce sequence")->required();
    shift->add_option("--w", w_str, "constant edge weight (> 0)")->required();

    auto* family = app.add_subcommand("family", "The m+1 bounce sequences used for interpolation");
    family->add_option("-m,--edges", family_m, "edge count of the target graph")->required();
    family->add_option("--w", w_str, "weight at which to list the shifted weights (default 7)");

    auto* demo = app.add_subcommand("reduce-demo",
                                    "Recover the reliability polynomial from evaluations at one fixed p");
    demo->add_option("-g,--graph", graph_file, "graph file")->required();
    demo->add_option("-p,--prob", p_str, "failure probability in (0,1)")->required();
    demo->add_option("--strategy", strategy_name, "brute|dc|dp (default dc)");
    demo->add_flag("--no-sp", no_sp, "blind mode: evaluate inflations without sp-reduction");

    CLI11_PARSE(app, argc, argv);

    try {
        EvalCaps caps = caps_from_env();
        if (eval->parsed()) {
            Graph g = load_graph(graph_file);
            std::cout << to_string(rel_point(g, parse_rational(p_str),
                                             parse_strategy(strategy_name, no_sp), caps))
                      << '\n';
        } else if (evalw->parsed()) {
            Graph g = load_graph(graph_file);
            std::vector<Rational> probs;
            for (const Edge& e : g.edges()) probs.push_back(e.weight);
            std::cout << to_string(rel_individual(g, probs, caps)) << '\n';
        } else if (coeffs->parsed()) {
            Graph g = load_graph(graph_file);
            UniPoly c = zrel_coeffs_direct(g, caps);
            if (basis == "w")
                std::cout << c.str() << '\n';
            else if (basis == "p")
                std::cout << zpoly_to_relpoly(c, g.m()).str() << '\n';
            else
                throw std::invalid_argument("unknown basis '" + basis + "' (want w or p)");
        } else if (count->parsed()) {
            std::cout << count_connected_spanning(load_graph(graph_file)).str() << '\n';
        } else if (trees->parsed()) {
            std::cout << spanning_trees(load_graph(graph_file)).str() << '\n';
        } else if (inflate_cmd->parsed()) {
            Graph g = load_graph(graph_file);
            TwoTerminalGraph gadget;
            if (!bounce_list.empty()) {
                gadget = bounce_graph(BounceSeq::parse(bounce_list));
            } else if (stretch_k > 0) {
                Graph path(stretch_k + 1);
                for (unsigned i = 0; i < stretch_k; ++i) path.add_edge(i, i + 1);
                gadget = TwoTerminalGraph(std::move(path), 0, stretch_k);
            } else if (thicken_k > 0) {
                Graph bundle(2);
                for (unsigned i = 0; i < thicken_k; ++i) bundle.add_edge(0, 1);
                gadget = TwoTerminalGraph(std::move(bundle), 0, 1);
            } else {
                throw std::invalid_argument("inflate needs --bounce, --stretch or --thicken");
            }
            std::ofstream out(out_file);
            if (!out) throw std::invalid_argument("cannot write: " + out_file);
            out << serialize_graph(inflate(g, gadget));
        } else if (shift->parsed()) {
            ShiftResult r = bounce_shift(BounceSeq::parse(bounce_list), parse_rational(w_str));
            std::cout << "w_S = " << to_string(r.new_weight) << ", C_S = " << to_string(r.prefactor)
                      << '\n';
        } else if (family->parsed()) {
            Rational w = parse_rational(w_str);
            for (const BounceSeq& s : bounce_family(family_m)) {
                ShiftResult r = bounce_shift(s, w);
                std::cout << s.str() << ": w_S = " << to_string(r.new_weight) << '\n';
            }
        } else if (demo->parsed()) {
            Graph g = load_graph(graph_file);
            RecoveryReport report = recover_rel_coeffs(g, parse_rational(p_str),
                                                       parse_strategy(strategy_name, no_sp), caps,
                                                       graph_file);
            std::cout << report.to_json() << '\n';
        }
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
