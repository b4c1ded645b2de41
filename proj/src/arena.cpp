#include "pgsynth/arena.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pgsynth {

Arena::Arena(State q0, int parity) : p_(parity) {
    bot_ = env_id(State::bot());
    top_ = env_id(State::top());
    // sink self-loops: hostile colour at BOT, friendly at TOP
    nodes_[bot_].edges.push_back({bot_, p_ ^ 1, -1});
    nodes_[top_].edges.push_back({top_, p_, -1});
    nodes_[bot_].expanded = true;
    nodes_[top_].expanded = true;
    init_ = env_id(q0);
    if (!nodes_[init_].expanded) boundary_.push_back(init_);
}

int Arena::env_id(const State& q) {
    auto it = env_ids_.find(q);
    if (it != env_ids_.end()) return it->second;
    int id = (int)nodes_.size();
    ArenaNode n;
    n.env = true;
    n.q = q;
    nodes_.push_back(std::move(n));
    env_ids_.emplace(q, id);
    n_env_++;
    return id;
}

void Arena::expand(const std::vector<int>& X_in, DpaHandle& h) {
    std::vector<int> X = X_in;  // X_in may alias boundary_
    for (int v : X) {
        auto it = std::find(boundary_.begin(), boundary_.end(), v);
        if (it == boundary_.end()) throw std::logic_error("expand: node not in boundary");
        boundary_.erase(it);
    }
    for (int v : X) {
        ArenaNode& nv = nodes_[v];
        nv.expanded = true;
        const TransitionGroup& cells = h.successors(nv.q);
        // consecutive cells with identical input cubes form one input class
        int n_classes = 0;
        for (std::size_t i = 0; i < cells.size();) {
            std::size_t j = i;
            while (j < cells.size() && cells[j].ins == cells[i].ins) j++;
            int inter = (int)nodes_.size();
            ArenaNode mid;
            mid.env = false;
            mid.q = nv.q;
            mid.input_class = n_classes++;
            mid.depth = nodes_[v].depth;
            nodes_.push_back(std::move(mid));
            nodes_[v].edges.push_back({inter, kTokenColour, -1});
            for (std::size_t k = i; k < j; k++) {
                const Cell& c = cells[k];
                double s = h.score(nodes_[v].q, c.rep).s;
                bool fresh = !has_env(c.succ);
                int w = env_id(c.succ);
                ArenaNode& nw = nodes_[w];
                if (fresh) {
                    nw.depth = nodes_[v].depth + 1;
                    nw.min_score = s;
                    nw.max_score = s;
                    if (!c.succ.is_sink()) boundary_.push_back(w);
                } else if (!nw.expanded) {
                    // keep refining the discovery scores while still on the boundary
                    nw.min_score = std::min(nw.min_score, s);
                    nw.max_score = std::max(nw.max_score, s);
                }
                nodes_[inter].edges.push_back({w, c.colour, (int)k});
            }
            i = j;
        }
    }
}

std::string Arena::dump() const {
    std::ostringstream os;
    os << "parity " << p_ << " init " << init_ << "\n";
    for (std::size_t v = 0; v < nodes_.size(); v++) {
        os << v << " " << (nodes_[v].env ? "env" : "ctrl");
        for (const ArenaEdge& e : nodes_[v].edges) {
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

}  // namespace pgsynth
