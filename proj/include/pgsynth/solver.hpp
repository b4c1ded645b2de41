// Strategy iteration over multiset colour weights. The game is viewed from a
// main player P who owns the "max" nodes and may always give up (the implicit
// target with distance 0); boundary nodes are worth 0, so they are never won.
// A node is won by P iff its final sup-inf distance is +infinity.
#ifndef PGSYNTH_SOLVER_HPP
#define PGSYNTH_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgsynth/arena.hpp"

namespace pgsynth {

// multiset of colours as a count vector; the token colour is the zero weight
struct Weight {
    std::vector<std::int64_t> c;

    explicit Weight(int n_colours = 0) : c(n_colours, 0) {}
    void add(int colour) {
        if (colour != kTokenColour) c[colour]++;
    }
    bool operator==(const Weight&) const = default;
};

// -1 / 0 / +1 for less / equal / greater under the player order: at the least
// differing colour, more of a friendly colour (≡₂ parity) is better, more of
// a hostile colour is worse
int cmp_weight(const Weight& g, const Weight& g2, int parity);

struct Distance {
    enum Tag : std::int8_t { NegInf = -1, Finite = 0, PosInf = 1 };
    Tag tag = Finite;
    Weight w;

    static Distance neg_inf() { return {NegInf, Weight()}; }
    static Distance pos_inf() { return {PosInf, Weight()}; }
    static Distance zero(int n_colours) { return {Finite, Weight(n_colours)}; }
    bool operator==(const Distance&) const = default;
};

int cmp_distance(const Distance& a, const Distance& b, int parity);

// d(to) plus the edge colour; absorbing on infinities
Distance add_colour(const Distance& d, int colour);

// Game from the main player's perspective. Terminals have their distance
// predefined and their edges ignored.
struct SolveGame {
    enum Term : std::int8_t { None, Zero, Pos, Neg };

    struct Node {
        bool max_node = false;  // owned by the main player
        Term term = None;
        std::vector<ArenaEdge> edges;
    };

    int parity = 0;
    int n_colours = 1;  // colours are 0 .. n_colours-1
    std::vector<Node> nodes;
};

// view of the arena for one side; boundary nodes become Zero terminals
SolveGame game_view(const Arena& a, bool main_is_controller);

// explicit-game text (same shape as Arena::dump, with "max"/"min" owners):
//   parity <p> init <v>
//   <id> <max|min> <succ>:<colour-or-inf> ...
// a node with no successors is a Zero terminal
SolveGame parse_game(const std::string& text, int* init = nullptr);
std::string dump_game(const SolveGame& g, int init = 0);

// per max node: allowed out-edge indices, plus the give-up option
struct Strategy {
    std::vector<std::vector<int>> edges;
    std::vector<char> give_up;

    void resize(std::size_t n) {
        edges.resize(n);
        give_up.resize(n, 1);  // new nodes default to give-up
    }
    bool operator==(const Strategy&) const = default;
};

Strategy all_give_up(const SolveGame& g);

// Greatest solution of the optimality equations for the strategy-restricted
// game. Requires the restriction to contain no negative cycle (no cycle whose
// minimal colour is hostile) and throws invalid_argument otherwise; the
// all-give-up strategy satisfies this and improve() preserves it.
std::vector<Distance> evaluate(const SolveGame& g, const Strategy& kappa);

// one nondeterministic improvement step; returns true iff kappa changed and
// sets *added_edges when a strictly better move was adopted somewhere
bool improve(const SolveGame& g, Strategy& kappa, const std::vector<Distance>& d,
             bool* added_edges = nullptr);

struct SolveResult {
    std::vector<char> won;  // per node: main player wins
    Strategy kappa;
    std::vector<Distance> dist;
    int iterations = 0;
};

// iterate evaluate/improve from kappa0 to the fixpoint; asserts the progress
// property (distances never drop, and increase somewhere whenever an
// improvement step adopted new edges)
SolveResult solve(const SolveGame& g, Strategy kappa0);

}  // namespace pgsynth

#endif
