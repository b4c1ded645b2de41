// Incompletely specified Mealy machines extracted from a winning controller
// strategy, their reduction, and state encodings.
#ifndef PGSYNTH_MEALY_HPP
#define PGSYNTH_MEALY_HPP

#include <string>
#include <vector>

#include "pgsynth/solver.hpp"

namespace pgsynth {

struct MealyMachine {
    Alphabet sigma;
    int init = 0;
    // per state, per input minterm: successor and an output product term
    // (unconstrained bits of the cube are unspecified outputs)
    struct Row {
        std::vector<int> succ;
        std::vector<Cube> out;
    };
    std::vector<Row> rows;
    // product-automaton state per machine state; empty when the shape was
    // erased by reduction (structured encoding then unavailable)
    std::vector<State> product;

    int n_states() const { return (int)rows.size(); }
    bool shaped() const { return !product.empty(); }

    // one line per (state, input cube): successor and output term
    std::string dump() const;
};

// minimum-literal implicant of an output set (bit i of set = minterm i);
// exact by enumeration for <= 12 variables, greedy literal dropping above
Cube min_prime_implicant(const std::vector<char>& set, int n_vars);

// sigma must win the initial node of the controller view of the arena
MealyMachine extract_mealy(const Arena& a, DpaHandle& h, const Strategy& sigma,
                           const std::vector<char>& won);

// merge states with identical rows (partition refinement); shape is dropped
// when any merge happens
MealyMachine reduce_mealy(const MealyMachine& m);

enum class EncodingMode { Unstructured, Structured };

struct StateEncoding {
    int bits = 0;
    std::vector<std::uint32_t> code;  // per state; code[init] == 0
};

StateEncoding encode(const MealyMachine& m, EncodingMode mode);

}  // namespace pgsynth

#endif
