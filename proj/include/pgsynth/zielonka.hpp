// Classical recursive parity-game solver, used as an independent oracle for
// the strategy-iteration solver. Works on the same SolveGame view; the main
// player wins a node iff they can force the least colour seen infinitely
// often to their parity (or reach the Pos terminal).
#ifndef PGSYNTH_ZIELONKA_HPP
#define PGSYNTH_ZIELONKA_HPP

#include <vector>

#include "pgsynth/solver.hpp"

namespace pgsynth {

std::vector<char> solve_zielonka(const SolveGame& g);

}  // namespace pgsynth

#endif
