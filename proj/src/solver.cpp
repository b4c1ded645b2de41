#include "pgsynth/solver.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace pgsynth {

int cmp_weight(const Weight& g, const Weight& g2, int parity) {
    std::size_t n = std::max(g.c.size(), g2.c.size());
    for (std::size_t c = 0; c < n; c++) {
        std::int64_t a = c < g.c.size() ? g.c[c] : 0;
        std::int64_t b = c < g2.c.size() ? g2.c[c] : 0;
        if (a == b) continue;
        bool friendly = (int)(c % 2) == parity;
        if (friendly) return a < b ? -1 : 1;
        return a < b ? 1 : -1;
    }
    return 0;
}

int cmp_distance(const Distance& a, const Distance& b, int parity) {
    if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
    if (a.tag != Distance::Finite) return 0;
    return cmp_weight(a.w, b.w, parity);
}

Distance add_colour(const Distance& d, int colour) {
    if (d.tag != Distance::Finite) return d;
    Distance out = d;
    out.w.add(colour);
    return out;
}

SolveGame game_view(const Arena& a, bool main_is_controller) {
    SolveGame g;
    g.parity = main_is_controller ? a.parity() : a.parity() ^ 1;
    int maxc = 0;
    for (const ArenaNode& n : a.nodes())
        for (const ArenaEdge& e : n.edges) maxc = std::max(maxc, e.colour);
    g.n_colours = maxc + 1;
    g.nodes.resize(a.nodes().size());
    for (std::size_t v = 0; v < a.nodes().size(); v++) {
        const ArenaNode& n = a.node((int)v);
        SolveGame::Node& m = g.nodes[v];
        m.max_node = n.env != main_is_controller;
        m.edges = n.edges;
        if ((int)v == a.bot()) m.term = main_is_controller ? SolveGame::Neg : SolveGame::Pos;
        if ((int)v == a.top()) m.term = main_is_controller ? SolveGame::Pos : SolveGame::Neg;
        if (n.env && !n.expanded) m.term = SolveGame::Zero;
    }
    return g;
}

SolveGame parse_game(const std::string& text, int* init) {
    SolveGame g;
    std::istringstream is(text);
    std::string tok;
    int maxc = 0;
    if (!(is >> tok) || tok != "parity") throw std::runtime_error("game: expected 'parity'");
    is >> g.parity >> tok;
    if (tok != "init") throw std::runtime_error("game: expected 'init'");
    int q0;
    is >> q0;
    if (init) *init = q0;
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        int id;
        std::string owner;
        if (!(ls >> id >> owner)) continue;
        if ((int)g.nodes.size() <= id) g.nodes.resize(id + 1);
        SolveGame::Node& n = g.nodes[id];
        n.max_node = owner == "max" || owner == "ctrl";
        std::string e;
        while (ls >> e) {
            auto colon = e.find(':');
            if (colon == std::string::npos) throw std::runtime_error("game: bad edge " + e);
            int to = std::stoi(e.substr(0, colon));
            std::string cs = e.substr(colon + 1);
            int colour = cs == "inf" ? kTokenColour : std::stoi(cs);
            maxc = std::max(maxc, colour);
            n.edges.push_back({to, colour, -1});
        }
        if (n.edges.empty()) n.term = SolveGame::Zero;
    }
    g.n_colours = maxc + 1;
    return g;
}

std::string dump_game(const SolveGame& g, int init) {
    std::ostringstream os;
    os << "parity " << g.parity << " init " << init << "\n";
    for (std::size_t v = 0; v < g.nodes.size(); v++) {
        os << v << " " << (g.nodes[v].max_node ? "max" : "min");
        for (const ArenaEdge& e : g.nodes[v].edges) {
            os << " " << e.to << ":";
            if (e.colour == kTokenColour) {
                os << "inf";
            } else {
                os << e.colour;
            }
        }
        os << "\n";
    }
    return os.str();
}

Strategy all_give_up(const SolveGame& g) {
    Strategy k;
    k.resize(g.nodes.size());
    return k;
}

namespace {

Distance terminal_dist(SolveGame::Term t, int n_colours) {
    switch (t) {
        case SolveGame::Zero: return Distance::zero(n_colours);
        case SolveGame::Pos: return Distance::pos_inf();
        case SolveGame::Neg: return Distance::neg_inf();
        default: break;
    }
    return Distance::zero(n_colours);
}

// one Jacobi relaxation; returns true if any node changed
bool relax(const SolveGame& g, const Strategy& k, std::vector<Distance>& d) {
    bool changed = false;
    std::vector<Distance> next(d.size());
    for (std::size_t v = 0; v < g.nodes.size(); v++) {
        const SolveGame::Node& n = g.nodes[v];
        if (n.term != SolveGame::None) {
            next[v] = d[v];
            continue;
        }
        Distance best;
        bool have = false;
        if (n.max_node) {
            if (k.give_up[v]) {
                best = Distance::zero(g.n_colours);
                have = true;
            }
            for (int ei : k.edges[v]) {
                Distance cand = add_colour(d[n.edges[ei].to], n.edges[ei].colour);
                if (!have || cmp_distance(cand, best, g.parity) > 0) best = cand;
                have = true;
            }
        } else {
            for (const ArenaEdge& e : n.edges) {
                Distance cand = add_colour(d[e.to], e.colour);
                if (!have || cmp_distance(cand, best, g.parity) < 0) best = cand;
                have = true;
            }
        }
        // a node with no moves at all cannot occur outside terminals
        assert(have);
        next[v] = best;
        if (!(next[v] == d[v])) changed = true;
    }
    d.swap(next);
    return changed;
}

// Does the kappa-restricted game contain a cycle whose least colour is
// hostile, i.e. a negative cycle? Such a cycle exists iff for some hostile
// colour h, the subgraph of restricted edges with colour >= h (token edges
// included) has a colour-h edge inside a strongly connected component.
// Checked per hostile colour with an iterative Tarjan walk.
bool has_negative_cycle(const SolveGame& g, const Strategy& k) {
    std::size_t nv = g.nodes.size();
    std::vector<std::vector<ArenaEdge>> adj(nv);
    for (std::size_t v = 0; v < nv; v++) {
        const SolveGame::Node& n = g.nodes[v];
        if (n.term != SolveGame::None) continue;
        if (n.max_node) {
            for (int ei : k.edges[v]) adj[v].push_back(n.edges[ei]);
        } else {
            adj[v] = n.edges;
        }
    }
    for (int h = 0; h < g.n_colours; h++) {
        if (h % 2 == g.parity) continue;  // friendly colours cannot be negative minima
        bool h_used = false;
        for (std::size_t v = 0; v < nv && !h_used; v++)
            for (const ArenaEdge& e : adj[v])
                if (e.colour == h) h_used = true;
        if (!h_used) continue;
        // SCCs of the subgraph with edges of colour >= h (token counts as big)
        auto keep = [&](int c) { return c == kTokenColour || c >= h; };
        std::vector<int> comp(nv, -1), low(nv), num(nv, -1), stk;
        std::vector<char> on(nv, 0);
        int counter = 0, n_comp = 0;
        struct Frame {
            int v;
            std::size_t ei;
        };
        for (std::size_t root = 0; root < nv; root++) {
            if (num[root] >= 0) continue;
            std::vector<Frame> call{{(int)root, 0}};
            num[root] = low[root] = counter++;
            stk.push_back((int)root);
            on[root] = 1;
            while (!call.empty()) {
                Frame& f = call.back();
                if (f.ei < adj[f.v].size()) {
                    const ArenaEdge& e = adj[f.v][f.ei++];
                    if (!keep(e.colour)) continue;
                    if (num[e.to] < 0) {
                        num[e.to] = low[e.to] = counter++;
                        stk.push_back(e.to);
                        on[e.to] = 1;
                        call.push_back({e.to, 0});
                    } else if (on[e.to]) {
                        low[f.v] = std::min(low[f.v], num[e.to]);
                    }
                } else {
                    int v = f.v;
                    call.pop_back();
                    if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
                    if (low[v] == num[v]) {
                        for (;;) {
                            int w = stk.back();
                            stk.pop_back();
                            on[w] = 0;
                            comp[w] = n_comp;
                            if (w == v) break;
                        }
                        n_comp++;
                    }
                }
            }
        }
        for (std::size_t v = 0; v < nv; v++)
            for (const ArenaEdge& e : adj[v])
                if (e.colour == h && comp[v] == comp[e.to]) return true;
    }
    return false;
}

}  // namespace

std::vector<Distance> evaluate(const SolveGame& g, const Strategy& kappa) {
    std::size_t nv = g.nodes.size();
    // Requires the restriction to contain no negative cycles; then every
    // infinite play is worth +infinity to the main player and the distances
    // are the greatest solution of the optimality equations: start every node
    // at +infinity and relax downwards. The opponent's optimal terminating
    // plays are simple (a cycle detour only raises the distance), so the
    // iteration settles within |V|+1 rounds.
    if (has_negative_cycle(g, kappa))
        throw std::invalid_argument("evaluate: restricted game has a negative cycle");
    std::vector<Distance> d(nv, Distance::pos_inf());
    for (std::size_t v = 0; v < nv; v++)
        if (g.nodes[v].term != SolveGame::None) d[v] = terminal_dist(g.nodes[v].term, g.n_colours);
    for (int round = 0; round < 2 * (int)nv + 4; round++)
        if (!relax(g, kappa, d)) return d;
    throw std::logic_error("evaluate: value iteration failed to converge");
}

bool improve(const SolveGame& g, Strategy& kappa, const std::vector<Distance>& d,
             bool* added_edges) {
    bool changed = false, added = false;
    for (std::size_t v = 0; v < g.nodes.size(); v++) {
        const SolveGame::Node& n = g.nodes[v];
        if (!n.max_node || n.term != SolveGame::None) continue;
        // full candidate values, give-up included
        Distance best = Distance::zero(g.n_colours);
        for (std::size_t ei = 0; ei < n.edges.size(); ei++) {
            Distance cand = add_colour(d[n.edges[ei].to], n.edges[ei].colour);
            if (cmp_distance(cand, best, g.parity) > 0) best = cand;
        }
        std::vector<int> arg;
        bool arg_give_up = cmp_distance(Distance::zero(g.n_colours), best, g.parity) == 0;
        for (std::size_t ei = 0; ei < n.edges.size(); ei++) {
            Distance cand = add_colour(d[n.edges[ei].to], n.edges[ei].colour);
            if (cmp_distance(cand, best, g.parity) == 0) arg.push_back((int)ei);
        }
        std::vector<int> ne;
        char ng;
        if (cmp_distance(best, d[v], g.parity) > 0) {
            // strict improvement: switch to the full argmax set
            ne = arg;
            ng = arg_give_up ? 1 : 0;
            added = true;
        } else {
            // keep only the members of kappa(v) that achieve the optimum
            for (int ei : kappa.edges[v])
                if (std::find(arg.begin(), arg.end(), ei) != arg.end()) ne.push_back(ei);
            ng = kappa.give_up[v] && arg_give_up;
            if (ne.empty() && !ng) {
                // optimum reached only through moves outside kappa: adopt them
                ne = arg;
                ng = arg_give_up ? 1 : 0;
            }
        }
        if (ne != kappa.edges[v] || ng != kappa.give_up[v]) {
            kappa.edges[v] = std::move(ne);
            kappa.give_up[v] = ng;
            changed = true;
        }
    }
    if (added_edges) *added_edges = added;
    return changed;
}

SolveResult solve(const SolveGame& g, Strategy kappa0) {
    SolveResult res;
    res.kappa = std::move(kappa0);
    res.kappa.resize(g.nodes.size());
    res.dist = evaluate(g, res.kappa);
    res.iterations = 1;
    for (;;) {
        bool added = false;
        if (!improve(g, res.kappa, res.dist, &added)) break;
        std::vector<Distance> d2 = evaluate(g, res.kappa);
        res.iterations++;
        if (added) {
            // progress: distances never drop, and strictly increase somewhere
            bool some_up = false;
            for (std::size_t v = 0; v < g.nodes.size(); v++) {
                int c = cmp_distance(d2[v], res.dist[v], g.parity);
                if (c < 0) throw std::logic_error("strategy improvement decreased a distance");
                if (c > 0) some_up = true;
            }
            if (!some_up) throw std::logic_error("strategy improvement made no progress");
        }
        res.dist = std::move(d2);
        if (res.iterations > 4 * (int)g.nodes.size() + 1000)
            throw std::logic_error("solve: no fixpoint");
    }
    res.won.assign(g.nodes.size(), 0);
    for (std::size_t v = 0; v < g.nodes.size(); v++)
        res.won[v] = res.dist[v].tag == Distance::PosInf;
    return res;
}

}  // namespace pgsynth
