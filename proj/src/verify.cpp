#include "pgsynth/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace pgsynth {

bool accepts_lasso(DpaHandle& h, const LassoWord& w) {
    if (w.loop.empty()) throw std::logic_error("accepts_lasso: empty loop");
    State q = h.initial();
    for (Letter nu : w.prefix) q = h.step(q, nu).q;
    // iterate the loop until (state, loop position) repeats
    std::vector<int> colours;
    int pos = 0, step = 0;
    std::map<std::pair<std::size_t, int>, std::vector<std::pair<State, int>>> buckets;
    auto find_seen = [&](const State& s, int p) -> int {
        auto& b = buckets[{s.hash(), p}];
        for (auto& [st, idx] : b)
            if (st == s) return idx;
        b.push_back({s, step});
        return -1;
    };
    for (;;) {
        int prev = find_seen(q, pos);
        if (prev >= 0) {
            int minc = colours[prev];
            for (int i = prev; i < step; i++) minc = std::min(minc, colours[i]);
            return minc % 2 == h.parity();
        }
        StepOut s = h.step(q, w.loop[pos]);
        colours.push_back(s.colour);
        q = s.q;
        pos = (pos + 1) % (int)w.loop.size();
        step++;
    }
}

namespace {

struct ProductGraph {
    struct Edge {
        int to, colour;
    };
    std::vector<std::vector<Edge>> adj;
    int parity;
};

// no cycle within the alive edge set may have a hostile minimal colour;
// checked per strongly connected component, peeling minimal colours
bool cycles_ok(const ProductGraph& g, std::vector<std::vector<char>> edge_alive) {
    int n = (int)g.adj.size();
    // Tarjan SCC (iterative)
    std::vector<int> comp(n, -1), low(n), num(n, -1), stack, callstack, iter(n, 0);
    std::vector<char> on_stack(n, 0);
    int counter = 0, n_comp = 0;
    for (int root = 0; root < n; root++) {
        if (num[root] >= 0) continue;
        callstack.push_back(root);
        while (!callstack.empty()) {
            int v = callstack.back();
            if (iter[v] == 0) {
                num[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (iter[v] < (int)g.adj[v].size()) {
                int e = iter[v]++;
                if (!edge_alive[v][e]) continue;
                int w = g.adj[v][e].to;
                if (num[w] < 0) {
                    callstack.push_back(w);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], num[w]);
            }
            if (descended) continue;
            if (low[v] == num[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = n_comp;
                    if (w == v) break;
                }
                n_comp++;
            }
            callstack.pop_back();
            if (!callstack.empty()) {
                int u = callstack.back();
                low[u] = std::min(low[u], low[v]);
            }
        }
    }
    // per component: find the minimal internal colour
    std::vector<int> minc(n_comp, -1);
    for (int v = 0; v < n; v++)
        for (std::size_t e = 0; e < g.adj[v].size(); e++) {
            if (!edge_alive[v][e]) continue;
            const auto& ed = g.adj[v][e];
            if (comp[ed.to] != comp[v]) continue;
            if (minc[comp[v]] < 0 || ed.colour < minc[comp[v]]) minc[comp[v]] = ed.colour;
        }
    bool any_removed = false;
    for (int v = 0; v < n; v++)
        for (std::size_t e = 0; e < g.adj[v].size(); e++) {
            if (!edge_alive[v][e]) continue;
            const auto& ed = g.adj[v][e];
            if (comp[ed.to] != comp[v]) {
                edge_alive[v][e] = 0;  // cross edges never lie on a cycle
                continue;
            }
            if (minc[comp[v]] % 2 != g.parity) return false;  // hostile cycle exists
            if (ed.colour == minc[comp[v]]) {
                edge_alive[v][e] = 0;
                any_removed = true;
            }
        }
    if (!any_removed) return true;
    return cycles_ok(g, std::move(edge_alive));
}

}  // namespace

bool verify_controller(const MealyMachine& m, DpaHandle& h, VerifyMode mode, bool* warned) {
    const Alphabet& ab = h.alphabet();
    if (ab.n_in() != m.sigma.n_in() || ab.size() != m.sigma.size())
        throw std::logic_error("verify_controller: alphabet mismatch");
    int n_in = ab.n_in(), n_out = ab.n_out();
    std::uint32_t ni = 1u << n_in;

    ProductGraph g;
    g.parity = h.parity();
    std::vector<std::pair<int, State>> order{{m.init, h.initial()}};
    std::map<std::pair<int, std::size_t>, std::vector<std::pair<State, int>>> ids;
    auto id_of = [&](int s, const State& q) -> std::pair<int, bool> {
        auto& b = ids[{s, q.hash()}];
        for (auto& [st, idx] : b)
            if (st == q) return {idx, false};
        int idx = (int)order.size() - 1;  // caller pushes first
        b.push_back({q, idx});
        return {idx, true};
    };
    ids[{m.init, h.initial().hash()}].push_back({h.initial(), 0});
    g.adj.emplace_back();
    for (std::size_t v = 0; v < order.size(); v++) {
        auto [ms, dq] = order[v];
        for (std::uint32_t i = 0; i < ni; i++) {
            const Cube& oc = m.rows[ms].out[i];
            std::uint32_t free_mask = ~oc.mask & ((1u << n_out) - 1);
            int n_free = std::popcount(free_mask);
            std::vector<std::uint32_t> outs;
            if (mode == VerifyMode::AllCompletions && n_free > 0 && n_free <= 8) {
                // enumerate every completion of the unspecified bits
                for (std::uint32_t sub = free_mask;; sub = (sub - 1) & free_mask) {
                    outs.push_back(oc.value | sub);
                    if (sub == 0) break;
                }
            } else {
                if (mode == VerifyMode::AllCompletions && n_free > 8 && warned) *warned = true;
                outs.push_back(oc.value);  // unspecified bits default to 0
            }
            for (std::uint32_t o : outs) {
                Letter nu = i | (o << n_in);
                StepOut st = h.step(dq, nu);
                int succ_m = m.rows[ms].succ[i];
                order.push_back({succ_m, st.q});
                auto [w, fresh] = id_of(succ_m, st.q);
                if (fresh) {
                    g.adj.emplace_back();
                } else {
                    order.pop_back();
                }
                g.adj[v].push_back({w, st.colour});
            }
        }
    }
    std::vector<std::vector<char>> alive;
    alive.reserve(g.adj.size());
    for (auto& row : g.adj) alive.emplace_back(row.size(), 1);
    return cycles_ok(g, std::move(alive));
}

double quality(long n, long r) {
    double pts = 2.0 - std::log10((double)(n + 1) / (double)(r + 1));
    return std::max(0.0, pts);
}

}  // namespace pgsynth
