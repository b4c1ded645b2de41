// Interned product states. A state mirrors the annotated formula tree: Weak
// leaves hold a derivative formula, Buchi leaves a breakpoint pair (u, v),
// composite nodes hold child states plus an optional round-robin counter or
// minimal-colour memory. Bot and Top are global sink states usable at any
// level of the tree.
#ifndef PGSYNTH_STATE_HPP
#define PGSYNTH_STATE_HPP

#include <string>
#include <vector>

#include "pgsynth/formula.hpp"

namespace pgsynth {

enum class SKind : std::uint8_t { Bot, Top, WLeaf, BLeaf, Node };

class State {
public:
    struct Rep {
        SKind kind;
        Formula u, v;              // WLeaf: u; BLeaf: (u, v)
        std::vector<State> kids;   // Node
        int aux;                   // counter/memory, -1 if absent
        std::size_t hash;
    };

    State() : r_(nullptr) {}

    static State bot();
    static State top();
    static State wleaf(Formula f);
    static State bleaf(Formula u, Formula v);
    static State node(std::vector<State> kids, int aux = -1);

    SKind kind() const { return r_->kind; }
    bool is_bot() const { return kind() == SKind::Bot; }
    bool is_top() const { return kind() == SKind::Top; }
    bool is_sink() const { return is_bot() || is_top(); }
    Formula u() const { return r_->u; }
    Formula v() const { return r_->v; }
    const std::vector<State>& kids() const { return r_->kids; }
    State kid(int i) const { return r_->kids[i]; }
    int aux() const { return r_->aux; }
    std::size_t hash() const { return r_->hash; }
    bool valid() const { return r_ != nullptr; }

    bool operator==(const State& o) const { return r_ == o.r_; }
    bool operator!=(const State& o) const { return r_ != o.r_; }

private:
    const Rep* r_;
    explicit State(const Rep* r) : r_(r) {}
    friend struct StateInterner;
};

struct StateHash {
    std::size_t operator()(const State& s) const { return s.hash(); }
};

std::string to_string(const State& s, const Alphabet& sigma);

}  // namespace pgsynth

#endif
