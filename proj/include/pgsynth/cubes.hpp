#ifndef PGSYNTH_CUBES_HPP
#define PGSYNTH_CUBES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pgsynth/formula.hpp"

namespace pgsynth {

// Product term over n boolean variables: variable i is constrained iff bit i
// of mask is set, to the value in bit i of value. mask == 0 is the full cube.
struct Cube {
    std::uint32_t mask = 0;
    std::uint32_t value = 0;
    bool operator==(const Cube&) const = default;
    bool contains(std::uint32_t minterm) const { return (minterm & mask) == value; }
    int literals() const;
};

// Disjoint cube cover of a minterm set (index = assignment, bit i = var i).
// Deterministic: Shannon expansion on the highest variable, merging equal
// halves, result sorted by (value, mask).
std::vector<Cube> cube_cover(const std::vector<char>& set, int n_vars);

// number of minterms of the set covered (sanity helper)
std::string cube_to_string(const Cube& c, const std::vector<std::string>& names);

}  // namespace pgsynth

#endif
