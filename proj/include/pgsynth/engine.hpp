// Synthesis driver: build the automaton for the annotated formula, then
// alternate exploration, expansion and two solver passes (controller with the
// automaton parity, environment with the complement parity) until one side
// wins the initial node. Strategies persist across iterations.
#ifndef PGSYNTH_ENGINE_HPP
#define PGSYNTH_ENGINE_HPP

#include <memory>
#include <string>

#include "pgsynth/explorer.hpp"
#include "pgsynth/solver.hpp"

namespace pgsynth {

struct EngineOptions {
    Exploration exploration = Exploration::Bfs;
    bool bfs_layer_mode = false;
    long max_states = 1000000;  // env-node budget
};

struct SynthesisStats {
    long env_nodes = 0;
    int iterations = 0;
    int solve_calls = 0;
    int filter_fallbacks = 0;
    double wall_seconds = 0.0;
};

struct SynthesisOutcome {
    bool realizable = false;
    std::unique_ptr<Arena> arena;
    std::unique_ptr<DpaHandle> dpa;
    Strategy strategy;          // winning side's strategy
    std::vector<char> won;      // winning side's won set over arena nodes
    SynthesisStats stats;
};

struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& m) : std::runtime_error(m) {}
};

SynthesisOutcome synthesize(Formula phi, const Alphabet& sigma, const EngineOptions& opts = {});

}  // namespace pgsynth

#endif
