#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pgsynth/solver.hpp"
#include "pgsynth/zielonka.hpp"
#include "support/oracle.hpp"

using namespace pgsynth;
using namespace pgsynth::testing;

namespace {

SolveGame game(const std::string& text) { return parse_game(text); }

std::vector<char> run(const SolveGame& g) { return solve(g, all_give_up(g)).won; }

}  // namespace

TEST_CASE("weight order: least differing colour dominates") {
    Weight a(3), b(3);
    CHECK(cmp_weight(a, b, 0) == 0);
    a.add(0);
    CHECK(cmp_weight(a, b, 0) > 0);   // colour 0 friendly at parity 0
    CHECK(cmp_weight(a, b, 1) < 0);   // hostile at parity 1
    b.add(0);
    b.add(1);
    CHECK(cmp_weight(a, b, 0) > 0);   // equal at 0, b has an extra hostile 1
    a.add(2);
    a.add(2);
    CHECK(cmp_weight(a, b, 0) > 0);   // colour 1 still decides before 2
}

TEST_CASE("distance order and colour addition") {
    int p = 0;
    Distance z = Distance::zero(2);
    CHECK(cmp_distance(Distance::pos_inf(), z, p) > 0);
    CHECK(cmp_distance(Distance::neg_inf(), z, p) < 0);
    CHECK(cmp_distance(z, z, p) == 0);
    Distance d = add_colour(z, 0);
    CHECK(cmp_distance(d, z, p) > 0);
    CHECK(add_colour(Distance::pos_inf(), 1) == Distance::pos_inf());
    CHECK(add_colour(Distance::neg_inf(), 0) == Distance::neg_inf());
    CHECK(add_colour(z, kTokenColour) == z);  // token edges are free
}

TEST_CASE("explicit game text round trips") {
    std::string text =
        "parity 1 init 0\n"
        "0 max 1:0 2:inf\n"
        "1 min 0:1 1:1\n"
        "2 max\n";
    int init = -1;
    SolveGame g = parse_game(text, &init);
    CHECK(init == 0);
    CHECK(g.parity == 1);
    CHECK(g.nodes.size() == 3);
    CHECK(g.nodes[0].max_node);
    CHECK(!g.nodes[1].max_node);
    CHECK(g.nodes[0].edges[1].colour == kTokenColour);
    CHECK(g.nodes[2].term == SolveGame::Zero);  // no successors = boundary
    SolveGame g2 = parse_game(dump_game(g, init));
    CHECK(g2.nodes.size() == g.nodes.size());
    CHECK(dump_game(g2, init) == dump_game(g, init));
}

TEST_CASE("single self-loop games") {
    // max node looping with a friendly colour: won
    CHECK(run(game("parity 0 init 0\n0 max 0:0\n")) == std::vector<char>{1});
    // hostile colour: the main player gives up instead, not won
    CHECK(run(game("parity 0 init 0\n0 max 0:1\n")) == std::vector<char>{0});
    // min-owned loop, friendly colour: opponent cannot avoid it
    CHECK(run(game("parity 0 init 0\n0 min 0:0\n")) == std::vector<char>{1});
    // a hostile cycle that never passes a max node is outside the solver's
    // domain (synthesis games alternate owners); the guard rejects it
    CHECK_THROWS_AS(run(game("parity 0 init 0\n0 min 0:1\n")), std::invalid_argument);
}

TEST_CASE("choice games") {
    // max can choose the even loop
    auto g = game(
        "parity 0 init 0\n"
        "0 max 1:0 2:0\n"
        "1 max 1:0\n"
        "2 max 2:1\n");
    auto won = run(g);
    CHECK(won[0]);
    CHECK(won[1]);
    CHECK(!won[2]);
    // min routes into the hostile loop
    auto g2 = game(
        "parity 0 init 0\n"
        "0 min 1:0 2:0\n"
        "1 max 1:0\n"
        "2 max 2:1\n");
    CHECK(!run(g2)[0]);
}

TEST_CASE("boundary nodes are never won") {
    auto g = game(
        "parity 0 init 0\n"
        "0 max 1:0\n"
        "1 max\n");
    auto won = run(g);
    CHECK(!won[0]);
    CHECK(!won[1]);
}

TEST_CASE("terminal distances are respected") {
    SolveGame g = game("parity 0 init 0\n0 max 1:0\n1 max 1:0\n");
    g.nodes[1].term = SolveGame::Pos;
    auto won = run(g);
    CHECK(won[0]);
    CHECK(won[1]);
    g.nodes[1].term = SolveGame::Neg;
    won = run(g);
    CHECK(!won[0]);  // gives up rather than entering the lost terminal
}

TEST_CASE("evaluate solves the strategy-restricted game") {
    SolveGame g = game(
        "parity 0 init 0\n"
        "0 max 1:0 2:1\n"
        "1 max 1:0\n"
        "2 max 2:1\n");
    Strategy k = all_give_up(g);
    auto d0 = evaluate(g, k);
    CHECK(d0[0] == Distance::zero(g.n_colours));
    k.give_up = {0, 0, 1};
    k.edges = {{0}, {0}, {}};
    auto d = evaluate(g, k);
    CHECK(d[0].tag == Distance::PosInf);
    CHECK(d[1].tag == Distance::PosInf);
    CHECK(d[2] == Distance::zero(g.n_colours));
    // restricting node 2 to its hostile self-loop would create a negative
    // cycle, which breaks the invariant evaluate relies on
    k.give_up = {0, 0, 0};
    k.edges = {{0}, {0}, {0}};
    CHECK_THROWS_AS(evaluate(g, k), std::invalid_argument);
}

TEST_CASE("evaluate propagates losing terminals") {
    SolveGame g = game("parity 0 init 0\n0 min 1:0\n1 max 1:0\n");
    g.nodes[1].term = SolveGame::Neg;
    auto d = evaluate(g, all_give_up(g));
    CHECK(d[1].tag == Distance::NegInf);
    CHECK(d[0].tag == Distance::NegInf);
}

TEST_CASE("improve only adopts strictly better moves") {
    SolveGame g = game(
        "parity 0 init 0\n"
        "0 max 1:0 2:1\n"
        "1 max 1:0\n"
        "2 max 2:1\n");
    Strategy k = all_give_up(g);
    auto d = evaluate(g, k);
    bool added = false;
    bool changed = improve(g, k, d, &added);
    CHECK(changed);
    CHECK(added);
    // iterating to the fixpoint reaches the winning strategy
    SolveResult r = solve(g, all_give_up(g));
    CHECK(r.won == std::vector<char>{1, 1, 0});
    CHECK(!r.kappa.give_up[0]);
    CHECK(r.kappa.edges[0] == std::vector<int>{0});
}

TEST_CASE("game view maps arena roles and parities") {
    // tiny fabricated arena text reused through parse_game on both views is
    // overkill; check the contract directly on a real arena in test_engine.
    SolveGame g = game("parity 1 init 0\n0 max 0:1\n");
    CHECK(run(g) == std::vector<char>{1});
}

TEST_CASE("differential check against the recursive oracle") {
    Rng rng(101);
    for (int i = 0; i < 120; i++) {
        SolveGame g = random_game(rng, 30, 4);
        auto a = run(g);
        auto b = solve_zielonka(g);
        CAPTURE(i);
        CAPTURE(dump_game(g));
        REQUIRE(a == b);
    }
}

TEST_CASE("solver is deterministic") {
    Rng rng(131);
    SolveGame g = random_game(rng, 40, 4);
    SolveResult r1 = solve(g, all_give_up(g));
    SolveResult r2 = solve(g, all_give_up(g));
    CHECK(r1.won == r2.won);
    CHECK(r1.kappa == r2.kappa);
    CHECK(r1.iterations == r2.iterations);
}
