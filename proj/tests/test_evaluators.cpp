#include <doctest.h>

#include "corpus.hpp"
#include "reliab/evaluators.hpp"

using namespace reliab;
using namespace reliab::testing;

TEST_CASE("zrel_brute") {
    CHECK(zrel_brute(k3()) == 4);
    CHECK(zrel_brute(path_graph({Rational(1), Rational(3)})) == 3);
    CHECK(zrel_brute(c5()) == 6);
    Graph disc(2);
    CHECK_THROWS_AS(zrel_brute(disc), std::invalid_argument);
    EvalCaps tiny;
    tiny.brute_edges = 2;
    CHECK_THROWS_AS(zrel_brute(k3(), tiny), CapExceededError);
}

TEST_CASE("ztut_brute") {
    CHECK(ztut_brute(k2(), Rational(2)) == 6);  // q^2 + q
    Graph one(1);
    CHECK(ztut_brute(one, Rational(5)) == 5);
    // q = 1 gives prod (1 + w_e)
    Graph g(3);
    g.add_edge(0, 1, Rational(2));
    g.add_edge(1, 2, Rational(1, 3));
    g.add_edge(2, 2, Rational(5));
    CHECK(ztut_brute(g, Rational(1)) == Rational(3) * Rational(4, 3) * Rational(6));
}

TEST_CASE("znul") {
    CHECK(znul(k2(), Rational(2)) == 3);
    CHECK(znul(k3(), Rational(0)) == 4);
    CHECK(znul(c5(), Rational(0)) == 6);
    for (Algo algo : {Algo::brute_force, Algo::del_contr, Algo::subset_dp})
        CHECK(znul(k3(), Rational(0), EvalStrategy{algo, true}) == 4);
}

TEST_CASE("tutte_brute") {
    CHECK(tutte_brute(k2(), Rational(7), Rational(9)) == 7);  // T(K2) = x
    CHECK(tutte_brute(k3(), Rational(1), Rational(1)) == 3);
    CHECK(tutte_brute(c5(), Rational(1), Rational(2)) == 6);
    CHECK(tutte_brute(c5(), Rational(1), Rational(2)) == zrel_brute(c5()));
}

TEST_CASE("rel_point") {
    CHECK(rel_point(c5(), Rational(1, 2)) == Rational(3, 16));
    CHECK(rel_point(c5(), Rational(1, 3)) == Rational(112, 243));
    CHECK(rel_point(pendant_triangle(), Rational(1, 2)) == Rational(2, 16));
    CHECK(rel_point(c5(), Rational(0)) == 1);
    CHECK(rel_point(c5(), Rational(1)) == 0);
    CHECK_THROWS_AS(rel_point(c5(), Rational(3, 2)), std::domain_error);
}

TEST_CASE("rel_individual") {
    Graph p = path_graph({Rational(1), Rational(1)});
    CHECK(rel_individual(p, {Rational(1, 2), Rational(1, 4)}) == Rational(3, 8));
    Graph tree = star(3);
    CHECK(rel_individual(tree, {Rational(0), Rational(0), Rational(0)}) == 1);
    Graph doubled(2);
    doubled.add_edge(0, 1);
    doubled.add_edge(0, 1);
    CHECK(rel_individual(doubled, {Rational(1, 2), Rational(1, 2)}) == Rational(3, 4));
    CHECK_THROWS_AS(rel_individual(p, {Rational(2), Rational(0)}), std::domain_error);
    // equal probabilities reduce to rel_point
    CHECK(rel_individual(c5(), std::vector<Rational>(5, Rational(1, 3))) ==
          rel_point(c5(), Rational(1, 3)));
}

TEST_CASE("zrel_delcontr") {
    for (bool sp : {false, true}) {
        CHECK(zrel_delcontr(k3(), sp) == 4);
        CHECK(zrel_delcontr(c5(), sp) == 6);
        CHECK(zrel_delcontr(star(3, Rational(7)), sp) == 343);
    }
}

TEST_CASE("znul_delcontr") {
    CHECK(znul_delcontr(k2(), Rational(2)) == 3);
    CHECK(znul_delcontr(k3(), Rational(0)) == 4);
    Graph loop(1);
    loop.add_edge(0, 0, Rational(5));
    CHECK(znul_delcontr(loop, Rational(3)) == 6);  // 1 + w
}

TEST_CASE("sp_reduce") {
    SUBCASE("doubled edge merges to one") {
        Graph doubled(2);
        doubled.add_edge(0, 1);
        doubled.add_edge(0, 1);
        auto [red, factor] = sp_reduce(doubled);
        CHECK(red.m() == 1);
        CHECK(red.edge(0).weight == 3);
        CHECK(factor == 1);
    }
    SUBCASE("triangle collapses soundly, stays put when all vertices are kept") {
        auto [red, factor] = sp_reduce(k3());
        CHECK(factor * zrel_brute(red) == 4);
        auto [kept, kfactor] = sp_reduce(k3(), {0, 1, 2});
        CHECK(kept.m() == 3);
        CHECK(kept.n() == 3);
        CHECK(kfactor == 1);
    }
    SUBCASE("2-stretch of C5 collapses back to C5 when its vertices are kept") {
        Graph stretched(10);
        for (std::size_t i = 0; i < 5; ++i) {
            stretched.add_edge(i, 5 + i);
            stretched.add_edge(5 + i, (i + 1) % 5);
        }
        auto [red, factor] = sp_reduce(stretched, {0, 1, 2, 3, 4});
        CHECK(red.n() == 5);
        CHECK(red.m() == 5);
        for (const Edge& e : red.edges()) CHECK(e.weight == Rational(1, 2));
        CHECK(factor == 32);
    }
    SUBCASE("n >= 2 is preserved") {
        auto [red, factor] = sp_reduce(c5());
        CHECK(red.n() >= 2);
        CHECK(factor * zrel_brute(red) == 6);
    }
}

TEST_CASE("zrel_subsetdp") {
    CHECK(zrel_subsetdp(k3()) == 4);
    CHECK(zrel_subsetdp(c5()) == 6);
    CHECK(zrel_subsetdp(star(4, Rational(2, 3))) == pow_rational(Rational(2, 3), 4));
    EvalCaps tiny;
    tiny.subsetdp_vertices = 3;
    CHECK_THROWS_AS(zrel_subsetdp(c5(), tiny), CapExceededError);
}

TEST_CASE("zrel_coeffs_direct") {
    CHECK(zrel_coeffs_direct(c5()) ==
          UniPoly({Rational(0), Rational(0), Rational(0), Rational(0), Rational(5), Rational(1)},
                  VarTag::w));
    CHECK(zrel_coeffs_direct(k3()) ==
          UniPoly({Rational(0), Rational(0), Rational(3), Rational(1)}, VarTag::w));
    CHECK(zrel_coeffs_direct(star(3)) ==
          UniPoly({Rational(0), Rational(0), Rational(0), Rational(1)}, VarTag::w));
}

TEST_CASE("spanning_trees") {
    CHECK(spanning_trees(c5()) == 5);
    CHECK(spanning_trees(k3()) == 3);
    CHECK(spanning_trees(k4()) == 16);
    Graph one(1);
    CHECK(spanning_trees(one) == 1);
    Graph disc(3);
    disc.add_edge(0, 1);
    CHECK(spanning_trees(disc) == 0);
    // parallel edges multiply, loops are ignored
    Graph multi(2);
    multi.add_edge(0, 1);
    multi.add_edge(0, 1);
    multi.add_edge(1, 1);
    CHECK(spanning_trees(multi) == 2);
}

TEST_CASE("count_connected_spanning") {
    CHECK(count_connected_spanning(c5()) == 6);
    CHECK(count_connected_spanning(star(4)) == 1);
    CHECK(count_connected_spanning(k3()) == 4);
}

TEST_CASE("evaluator agreement on a small corpus") {
    auto graphs = connected_simple_corpus(2, 4);
    auto multis = random_multigraph_corpus(10);
    graphs.insert(graphs.end(), multis.begin(), multis.end());
    for (const Graph& g : graphs) {
        Rational reference = zrel_brute(g);
        CHECK(zrel_delcontr(g, false) == reference);
        CHECK(zrel_delcontr(g, true) == reference);
        CHECK(zrel_subsetdp(g) == reference);
        auto [red, factor] = sp_reduce(g);
        CHECK(factor * zrel_brute(red) == reference);
    }
}
