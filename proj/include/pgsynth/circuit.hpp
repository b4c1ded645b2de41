// And-inverter circuits with latches, plus lowering from an encoded Mealy
// machine via decision diagrams.
#ifndef PGSYNTH_CIRCUIT_HPP
#define PGSYNTH_CIRCUIT_HPP

#include <cstdint>
#include <vector>

#include "pgsynth/mealy.hpp"

namespace pgsynth {

// AIGER-style literals: 0/1 constants, 2v / 2v+1 variable v and its negation.
// Variables: 1..I inputs, I+1..I+L latches, then and-gates.
struct Circuit {
    int n_inputs = 0;
    int n_latches = 0;
    struct Gate {
        int rhs0, rhs1;  // conjunction of two literals; gate i defines var I+L+1+i
    };
    std::vector<Gate> gates;
    std::vector<int> next;  // per latch: next-state literal
    std::vector<int> outs;  // per output: literal

    int n_outputs() const { return (int)outs.size(); }
    int n_vars() const { return n_inputs + n_latches + (int)gates.size(); }
    int size() const { return (int)gates.size() + n_latches; }

    // one step from the latch state under the given input bits; returns the
    // output bits and replaces state with the next latch values
    std::uint32_t step(std::uint32_t& state, std::uint32_t inputs) const;
};

// lower the encoded machine; q0 is encoded as all-zero latches (guaranteed
// by encode), fixed variable order: inputs then state bits
Circuit to_circuit(const MealyMachine& m, const StateEncoding& enc);

struct CircuitArtifact {
    Circuit circuit;
    std::string aag;
    std::string combination;  // which encoding/reduction produced it
};

// smallest of {reduced+unstructured, raw+structured, raw+unstructured};
// ties broken lexicographically on the serialized text
CircuitArtifact portfolio_circuit(const MealyMachine& m);

}  // namespace pgsynth

#endif
