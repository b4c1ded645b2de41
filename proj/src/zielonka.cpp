#include "pgsynth/zielonka.hpp"

#include <algorithm>

namespace pgsynth {
namespace {

// node-coloured min-parity game obtained by edge splitting
struct PG {
    int parity;
    struct Node {
        int owner;   // 0 = main, 1 = opponent
        int colour;  // neutral colour for original nodes
        std::vector<int> succ;
    };
    std::vector<Node> nodes;
    std::vector<std::vector<int>> pred;

    void finish() {
        pred.resize(nodes.size());
        for (std::size_t v = 0; v < nodes.size(); v++)
            for (int w : nodes[v].succ) pred[w].push_back((int)v);
    }
};

// attractor of target for player i within the alive set (target consumed)
std::vector<char> attractor(const PG& g, int i, std::vector<char> in, const std::vector<char>& alive) {
    std::vector<int> out_deg(g.nodes.size(), 0);
    std::vector<int> queue;
    for (std::size_t v = 0; v < g.nodes.size(); v++) {
        if (!alive[v]) continue;
        for (int w : g.nodes[v].succ)
            if (alive[w]) out_deg[v]++;
        if (in[v]) queue.push_back((int)v);
    }
    while (!queue.empty()) {
        int w = queue.back();
        queue.pop_back();
        for (int v : g.pred[w]) {
            if (!alive[v] || in[v]) continue;
            if (g.nodes[v].owner == i || --out_deg[v] == 0) {
                in[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return in;
}

// winners within the alive subgame; wins[v] = owner index of the winner
void zielonka(const PG& g, std::vector<char> alive, std::vector<char>& wins) {
    int minc = -1;
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (alive[v] && (minc < 0 || g.nodes[v].colour < minc)) minc = g.nodes[v].colour;
    if (minc < 0) return;
    int i = minc % 2 == g.parity ? 0 : 1;
    std::vector<char> target(g.nodes.size(), 0);
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (alive[v] && g.nodes[v].colour == minc) target[v] = 1;
    std::vector<char> A = attractor(g, i, std::move(target), alive);
    std::vector<char> rest = alive;
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (A[v]) rest[v] = 0;
    zielonka(g, rest, wins);
    bool opp_wins_some = false;
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (rest[v] && wins[v] == 1 - i) opp_wins_some = true;
    if (!opp_wins_some) {
        for (std::size_t v = 0; v < g.nodes.size(); v++)
            if (alive[v]) wins[v] = (char)i;
        return;
    }
    std::vector<char> opp(g.nodes.size(), 0);
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (rest[v] && wins[v] == 1 - i) opp[v] = 1;
    std::vector<char> B = attractor(g, 1 - i, std::move(opp), alive);
    std::vector<char> rest2 = alive;
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (B[v]) rest2[v] = 0;
    zielonka(g, rest2, wins);
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        if (B[v]) wins[v] = (char)(1 - i);
}

}  // namespace

std::vector<char> solve_zielonka(const SolveGame& g) {
    PG pg;
    pg.parity = g.parity;
    int neutral = g.n_colours + 1;  // never minimal on a cycle: every edge is split
    std::size_t nv = g.nodes.size();
    pg.nodes.resize(nv);
    for (std::size_t v = 0; v < nv; v++) {
        pg.nodes[v].owner = g.nodes[v].max_node ? 0 : 1;
        pg.nodes[v].colour = neutral;
    }
    auto add_edge = [&](int from, int to, int colour) {
        int e = (int)pg.nodes.size();
        pg.nodes.push_back({pg.nodes[from].owner, colour == kTokenColour ? neutral : colour, {to}});
        pg.nodes[from].succ.push_back(e);
    };
    for (std::size_t v = 0; v < nv; v++) {
        const SolveGame::Node& n = g.nodes[v];
        switch (n.term) {
            case SolveGame::None:
                for (const ArenaEdge& e : n.edges) add_edge((int)v, e.to, e.colour);
                break;
            case SolveGame::Pos: add_edge((int)v, (int)v, g.parity); break;
            case SolveGame::Zero:
            case SolveGame::Neg: add_edge((int)v, (int)v, g.parity ^ 1); break;
        }
    }
    pg.finish();
    std::vector<char> wins(pg.nodes.size(), 0);
    zielonka(pg, std::vector<char>(pg.nodes.size(), 1), wins);
    std::vector<char> won(nv, 0);
    for (std::size_t v = 0; v < nv; v++) won[v] = wins[v] == 0;
    return won;
}

}  // namespace pgsynth
