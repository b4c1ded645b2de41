// Incrementally constructed parity-game arena with Mealy semantics.
// Environment nodes are automaton states (plus the BOT/TOP sinks); for each
// input cell I of a state q there is one intermediate node (q, I) where the
// controller picks the output cell. Edges q -> (q, I) carry the reserved
// token colour (the zero weight); edges (q, I) -> q' carry automaton colours.
#ifndef PGSYNTH_ARENA_HPP
#define PGSYNTH_ARENA_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "pgsynth/automata.hpp"

namespace pgsynth {

// reserved colour of env -> intermediate edges; acts as the zero weight
inline constexpr int kTokenColour = -1;

struct ArenaEdge {
    int to;
    int colour;      // kTokenColour or an automaton colour
    int cell = -1;   // index into the owning state's TransitionGroup (intermediate edges)
};

struct ArenaNode {
    bool env;                     // true: environment picks an input cell
    State q;                      // automaton state (env and intermediate nodes)
    int input_class = -1;         // intermediate: index of the input class
    int depth = 0;                // discovery depth (env nodes)
    double min_score = 1.0;       // min/max incoming edge score at discovery
    double max_score = 0.0;
    bool expanded = false;        // env: successors materialised
    std::vector<ArenaEdge> edges;
};

class Arena {
public:
    Arena(State q0, int parity);

    int parity() const { return p_; }
    int initial() const { return init_; }
    int bot() const { return bot_; }
    int top() const { return top_; }

    const std::vector<ArenaNode>& nodes() const { return nodes_; }
    const ArenaNode& node(int v) const { return nodes_[v]; }
    const std::vector<int>& boundary() const { return boundary_; }
    int n_env() const { return n_env_; }

    // id of an env node, creating it on first sight
    int env_id(const State& q);
    bool has_env(const State& q) const { return env_ids_.count(q) != 0; }

    // materialise the successors of the boundary nodes in X
    void expand(const std::vector<int>& X, DpaHandle& h);

    // explicit parity-game listing, shared with the solver oracle:
    // first line "parity p init v", then one line per node:
    //   <id> <env|ctrl> <succ>:<colour> ...    (colour "inf" for the token)
    std::string dump() const;

private:
    int p_;
    std::vector<ArenaNode> nodes_;
    std::unordered_map<State, int, StateHash> env_ids_;
    std::vector<int> boundary_;
    int init_, bot_, top_;
    int n_env_ = 0;
};

}  // namespace pgsynth

#endif
