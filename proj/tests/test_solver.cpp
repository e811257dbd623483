#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "marklab/constructions.hpp"
#include "marklab/families.hpp"
#include "marklab/solver.hpp"
#include "marklab/strategies.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace marklab;
namespace fam = marklab::families;

TEST_CASE("values of small graphs")
{
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(game_coloring_number(k2).value == 2);
    CHECK(brute_force_value(k2) == 2);
    CHECK(game_coloring_number(Graph{}).value == 0);
    CHECK(game_coloring_number(build_graph(1, {})).value == 1);
    CHECK(brute_force_value(fam::path(3)) == 2);
    CHECK(brute_force_value(cycle(4)) == 3);
    for (int n = 4; n <= 9; ++n)
        CHECK(game_coloring_number(cycle(n)).value == 3);
}

TEST_CASE("search agrees with raw sequence minimax")
{
    for (const auto& [name, g] : testing::small_corpus(7)) {
        CAPTURE(name);
        int expected = testing::minimax_by_sequences(g);
        CHECK(brute_force_value(g) == expected);
        CHECK(game_coloring_number(g).value == expected);
    }
}

TEST_CASE("memo and pruning never change the value")
{
    for (const auto& [name, g] : testing::small_corpus(11)) {
        CAPTURE(name);
        SolveOptions plain;
        plain.memo = false;
        plain.prune = false;
        SolveOptions memo_only;
        memo_only.prune = false;
        SolveOptions full;
        int v = game_coloring_number(g, full).value;
        CHECK(game_coloring_number(g, memo_only).value == v);
        if (g.num_vertices() <= 8)
            CHECK(game_coloring_number(g, plain).value == v);
        SolveOptions hinted;
        hinted.alice_hint = testing::smallest_last_order(g);
        CHECK(game_coloring_number(g, hinted).value == v);
        CHECK(degeneracy(g) + 1 <= v);
        CHECK(v <= g.max_degree() + 1);
    }
}

TEST_CASE("principal variation realises the value")
{
    for (const auto& [name, g] : testing::small_corpus(12)) {
        CAPTURE(name);
        SolveResult r = game_coloring_number(g);
        REQUIRE(static_cast<int>(r.principal_variation.size()) == g.num_vertices());
        CHECK(score_of_sequence(g, r.principal_variation) == r.value);
    }
}

TEST_CASE("budget and size limits")
{
    SolveOptions opts;
    opts.node_budget = 5;
    CHECK_THROWS_AS(game_coloring_number(fam::random_graph(14, 0.3, 1), opts), BudgetExceeded);
    try {
        game_coloring_number(fam::random_graph(14, 0.3, 1), opts);
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower() <= e.upper());
        CHECK(e.nodes() >= 5);
    }
    SolveOptions small;
    small.max_vertices = 10;
    CHECK_THROWS(game_coloring_number(cycle(11), small));
    CHECK_THROWS(brute_force_value(cycle(9)));
}

TEST_CASE("best responses")
{
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(best_response_bob(k2, GreedyOrder(LinearOrder::identity(2))) == 2);
    CHECK(best_response_alice(k2, RandomStrategy(3)) == 2);

    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    LinearOrder l = LinearOrder::from_greatest_first(std::vector<Vertex>{1, 0, 2});
    int least = best_response_bob(p3, ActivationAlice(l));
    int greatest = best_response_bob(p3, ActivationAlice(l, ActivationRule::Greatest));
    CHECK(least <= 4);
    CHECK(greatest <= 4);
    CHECK(least == 3);
    CHECK(greatest == 2);

    ConstructionGraph g1 = lower_bound_graph(1);
    CHECK(best_response_alice(g1.graph, Theorem3Bob(g1)) <= 4);
}

TEST_CASE("best responses agree without memo")
{
    for (const auto& [name, g] : testing::small_corpus(9)) {
        CAPTURE(name);
        LinearOrder l = testing::smallest_last_order(g);
        ResponseOptions no_memo;
        no_memo.memo = false;
        ActivationAlice alice(l);
        CHECK(best_response_bob(g, alice) == best_response_bob(g, alice, no_memo));
        MaxMarkedNeighbors bob;
        CHECK(best_response_alice(g, bob) == best_response_alice(g, bob, no_memo));
        RandomStrategy rnd(5);
        CHECK(best_response_bob(g, rnd) == best_response_bob(g, rnd, no_memo));
    }
}

TEST_CASE("best responses bracket the game value")
{
    for (const auto& [name, g] : testing::small_corpus(10)) {
        CAPTURE(name);
        int value = game_coloring_number(g).value;
        LinearOrder l = testing::reference_order(g);
        CHECK(best_response_bob(g, ActivationAlice(l)) >= value);
        CHECK(best_response_bob(g, GreedyOrder(l)) >= value);
        CHECK(best_response_alice(g, MaxMarkedNeighbors()) <= value);
        CHECK(best_response_alice(g, LowestId()) <= value);
    }
}

TEST_CASE("activation bound on random orders")
{
    // Permissive rank with the least rule: no violations of 1 + r(L,G).
    std::mt19937_64 rng(99);
    for (int i = 0; i < 150; ++i) {
        int n = 3 + i % 8;
        Graph g = fam::random_graph(n, 0.2 + 0.1 * (i % 5), 31000 + i);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        LinearOrder l = LinearOrder::from_greatest_first(perm);
        CAPTURE(i);
        CHECK(best_response_bob(g, ActivationAlice(l)) <= 1 + rank_order(g, l).r_of_order);
    }
}

TEST_CASE("greatest rule exceeds the bound on a star")
{
    Graph star = fam::star(4);
    LinearOrder l = LinearOrder::from_greatest_first(std::vector<Vertex>{1, 2, 3, 0, 4});
    int r = rank_order(star, l).r_of_order;
    CHECK(r == 3);
    CHECK(best_response_bob(star, ActivationAlice(l, ActivationRule::Greatest)) == 5);
    CHECK(best_response_bob(star, ActivationAlice(l)) <= 1 + r);
}
