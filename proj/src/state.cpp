#include "pgsynth/state.hpp"

#include <deque>
#include <mutex>
#include <unordered_set>

namespace pgsynth {
namespace {

std::size_t rep_hash(SKind k, Formula u, Formula v, const std::vector<State>& kids, int aux) {
    std::size_t h = (std::size_t)k * 0x9e3779b97f4a7c15ull + (std::size_t)(aux + 2) * 0xff51afd7ed558ccdull;
    if (u.valid()) h = h * 31 + u.hash();
    if (v.valid()) h = h * 31 + v.hash();
    for (const State& s : kids) h = h * 0xc2b2ae3d27d4eb4full + s.hash();
    return h;
}

struct RepKey {
    const State::Rep* r;
    bool operator==(const RepKey& o) const {
        return r->kind == o.r->kind && r->u == o.r->u && r->v == o.r->v && r->aux == o.r->aux && r->kids == o.r->kids;
    }
};
struct RepKeyHash {
    std::size_t operator()(const RepKey& k) const { return k.r->hash; }
};

}  // namespace

struct StateInterner {
    std::mutex mu;
    std::deque<State::Rep> store;
    std::unordered_set<RepKey, RepKeyHash> table;

    static StateInterner& instance() {
        static StateInterner* it = new StateInterner;
        return *it;
    }

    State intern(SKind k, Formula u, Formula v, std::vector<State> kids, int aux) {
        State::Rep probe{k, u, v, std::move(kids), aux, 0};
        probe.hash = rep_hash(k, u, v, probe.kids, aux);
        std::lock_guard<std::mutex> lock(mu);
        auto it = table.find(RepKey{&probe});
        if (it != table.end()) return State(it->r);
        store.push_back(std::move(probe));
        const State::Rep* r = &store.back();
        table.insert(RepKey{r});
        return State(r);
    }
};

State State::bot() {
    static State s = StateInterner::instance().intern(SKind::Bot, {}, {}, {}, -1);
    return s;
}
State State::top() {
    static State s = StateInterner::instance().intern(SKind::Top, {}, {}, {}, -1);
    return s;
}
State State::wleaf(Formula f) { return StateInterner::instance().intern(SKind::WLeaf, f, {}, {}, -1); }
State State::bleaf(Formula u, Formula v) { return StateInterner::instance().intern(SKind::BLeaf, u, v, {}, -1); }
State State::node(std::vector<State> kids, int aux) {
    return StateInterner::instance().intern(SKind::Node, {}, {}, std::move(kids), aux);
}

std::string to_string(const State& s, const Alphabet& sigma) {
    switch (s.kind()) {
        case SKind::Bot: return "BOT";
        case SKind::Top: return "TOP";
        case SKind::WLeaf: return "[" + to_string(s.u(), sigma) + "]";
        case SKind::BLeaf: return "[" + to_string(s.u(), sigma) + " ; " + to_string(s.v(), sigma) + "]";
        case SKind::Node: {
            std::string out = "(";
            for (std::size_t i = 0; i < s.kids().size(); i++) {
                if (i) out += ", ";
                out += to_string(s.kids()[i], sigma);
            }
            if (s.aux() >= 0) out += ", " + std::to_string(s.aux());
            out += ")";
            return out;
        }
    }
    return "?";
}

}  // namespace pgsynth
