#include "pgsynth/engine.hpp"

#include <chrono>

namespace pgsynth {

SynthesisOutcome synthesize(Formula phi, const Alphabet& sigma, const EngineOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    SynthesisOutcome out;
    out.dpa = std::make_unique<DpaHandle>(annotate(phi), sigma);
    int p = out.dpa->parity();
    out.arena = std::make_unique<Arena>(out.dpa->initial(), p);
    Arena& a = *out.arena;

    Strategy sigma_c, tau_e;  // controller / environment strategies
    std::vector<char> decided;
    auto finish = [&](bool realizable, SolveResult&& win) {
        out.realizable = realizable;
        out.strategy = std::move(win.kappa);
        out.won = std::move(win.won);
        out.stats.env_nodes = a.n_env();
        out.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };

    for (;;) {
        out.stats.iterations++;
        if (!a.boundary().empty()) {
            std::vector<int> X = explore(a, opts.exploration, decided, opts.bfs_layer_mode,
                                         &out.stats.filter_fallbacks);
            a.expand(X, *out.dpa);
            if (a.n_env() > opts.max_states)
                throw ResourceLimit("state budget exceeded (" + std::to_string(opts.max_states) +
                                    " environment nodes)");
        }
        SolveGame gc = game_view(a, true);
        sigma_c.resize(gc.nodes.size());
        SolveResult rc = solve(gc, sigma_c);
        sigma_c = rc.kappa;
        out.stats.solve_calls++;
        if (rc.won[a.initial()]) {
            finish(true, std::move(rc));
            return out;
        }

        SolveGame ge = game_view(a, false);
        tau_e.resize(ge.nodes.size());
        SolveResult re = solve(ge, tau_e);
        tau_e = re.kappa;
        out.stats.solve_calls++;
        if (re.won[a.initial()]) {
            finish(false, std::move(re));
            return out;
        }

        if (a.boundary().empty())
            throw std::logic_error("fully explored arena left the initial node undecided");

        decided.assign(a.nodes().size(), 0);
        for (std::size_t v = 0; v < decided.size(); v++)
            decided[v] = rc.won[v] || re.won[v];
    }
}

}  // namespace pgsynth
