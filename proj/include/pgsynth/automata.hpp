// On-the-fly deterministic parity automaton for an annotated formula.
// Transition colours, min-parity acceptance: a run is accepting iff the least
// colour seen infinitely often is congruent to the parity p mod 2.
#ifndef PGSYNTH_AUTOMATA_HPP
#define PGSYNTH_AUTOMATA_HPP

#include <memory>
#include <unordered_map>
#include <vector>

#include "pgsynth/annotation.hpp"
#include "pgsynth/cubes.hpp"
#include "pgsynth/state.hpp"

namespace pgsynth {

struct StepOut {
    State q;
    int colour;
};

// quality score of a transition: weight w > 0 and value s in [0,1]
struct Score {
    double w;
    double s;
};

namespace detail {
class Aut;
}

// One maximal (I, O) cell of a state's outgoing transitions: all letters in
// I x O share the colour and successor. rep is one representative letter.
struct Cell {
    std::vector<Cube> ins;
    std::vector<Cube> outs;
    int colour;
    State succ;
    Letter rep;
    int n_outputs;  // number of output minterms in the cell
};

using TransitionGroup = std::vector<Cell>;

class DpaHandle {
public:
    DpaHandle(AnnotatedFormula ann, Alphabet sigma);
    ~DpaHandle();
    DpaHandle(DpaHandle&&) noexcept;
    DpaHandle& operator=(DpaHandle&&) noexcept;

    const Alphabet& alphabet() const { return sigma_; }
    const AnnNode& annotation() const { return *ann_; }
    int parity() const;
    int max_colour() const;

    State initial() const;
    StepOut step(const State& q, Letter nu) const;
    Score score(const State& q, Letter nu) const;

    const TransitionGroup& successors(const State& q);

    void set_memoization(bool on) { memo_on_ = on; }

    // line-oriented HOA-like listing of the states reachable from the
    // initial state (debugging aid)
    std::string dump(int max_states = 1000);

private:
    AnnotatedFormula ann_;
    Alphabet sigma_;
    std::unique_ptr<detail::Aut> root_;
    bool memo_on_ = true;
    std::unordered_map<State, TransitionGroup, StateHash> memo_;
    TransitionGroup scratch_;

    TransitionGroup compute_successors(const State& q) const;
};

}  // namespace pgsynth

#endif
