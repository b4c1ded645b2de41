// Exploration strategies choosing which boundary nodes to expand next:
// bfs (minimal discovery depth), pq (extreme incoming-edge scores), and the
// "+" variants that first filter the boundary down to nodes reachable from
// the initial node through undecided nodes only.
#ifndef PGSYNTH_EXPLORER_HPP
#define PGSYNTH_EXPLORER_HPP

#include <vector>

#include "pgsynth/arena.hpp"

namespace pgsynth {

enum class Exploration { Bfs, BfsPlus, Pq, PqPlus };

// boundary nodes reachable from the initial node via undecided nodes only;
// decided[v] = true when either side has won v in the latest solve round
std::vector<int> filter_boundary(const Arena& a, const std::vector<char>& decided);

// minimal-depth pick: one node (earliest discovered), or the whole front
// layer when layer_mode is set
std::vector<int> explore_bfs(const Arena& a, const std::vector<int>& candidates,
                             bool layer_mode = false);

// argmin of the min incoming score plus argmax of the max incoming score
// (ties by insertion order; the two picks may coincide)
std::vector<int> explore_pq(const Arena& a, const std::vector<int>& candidates);

// dispatch on the configured strategy; for the "+" variants an empty filter
// result with a nonempty boundary falls back to the unfiltered boundary and
// bumps *fallbacks
std::vector<int> explore(const Arena& a, Exploration mode, const std::vector<char>& decided,
                         bool layer_mode = false, int* fallbacks = nullptr);

}  // namespace pgsynth

#endif
