#include "pgsynth/explorer.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgsynth {

std::vector<int> filter_boundary(const Arena& a, const std::vector<char>& decided) {
    std::vector<char> seen(a.nodes().size(), 0);
    std::vector<int> stack;
    int q0 = a.initial();
    if (q0 < (int)decided.size() && decided[q0]) return {};
    seen[q0] = 1;
    stack.push_back(q0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const ArenaEdge& e : a.node(v).edges) {
            if (seen[e.to]) continue;
            if (e.to < (int)decided.size() && decided[e.to]) continue;
            seen[e.to] = 1;
            stack.push_back(e.to);
        }
    }
    std::vector<int> out;
    for (int b : a.boundary())
        if (seen[b]) out.push_back(b);
    return out;
}

std::vector<int> explore_bfs(const Arena& a, const std::vector<int>& candidates, bool layer_mode) {
    if (candidates.empty()) throw std::logic_error("explore: empty boundary");
    int best_depth = a.node(candidates[0]).depth;
    for (int b : candidates) best_depth = std::min(best_depth, a.node(b).depth);
    std::vector<int> out;
    for (int b : candidates)  // candidates follow discovery order
        if (a.node(b).depth == best_depth) {
            out.push_back(b);
            if (!layer_mode) break;
        }
    return out;
}

std::vector<int> explore_pq(const Arena& a, const std::vector<int>& candidates) {
    if (candidates.empty()) throw std::logic_error("explore: empty boundary");
    int lo = candidates[0], hi = candidates[0];
    for (int b : candidates) {
        if (a.node(b).min_score < a.node(lo).min_score) lo = b;
        if (a.node(b).max_score > a.node(hi).max_score) hi = b;
    }
    std::vector<int> out{lo};
    if (hi != lo) out.push_back(hi);
    return out;
}

std::vector<int> explore(const Arena& a, Exploration mode, const std::vector<char>& decided,
                         bool layer_mode, int* fallbacks) {
    std::vector<int> cand;
    if (mode == Exploration::BfsPlus || mode == Exploration::PqPlus) {
        cand = filter_boundary(a, decided);
        if (cand.empty() && !a.boundary().empty()) {
            cand = a.boundary();
            if (fallbacks) (*fallbacks)++;
        }
    } else {
        cand = a.boundary();
    }
    if (mode == Exploration::Pq || mode == Exploration::PqPlus) return explore_pq(a, cand);
    return explore_bfs(a, cand, layer_mode);
}

}  // namespace pgsynth
