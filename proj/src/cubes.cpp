#include "pgsynth/cubes.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace pgsynth {

int Cube::literals() const { return std::popcount(mask); }

namespace {

// cover of set[base .. base+2^var) where variables 0..var-1 are free
void cover_rec(const std::vector<char>& set, std::uint32_t base, int var, std::vector<Cube>& out) {
    std::uint32_t len = 1u << var;
    bool all = true, none = true;
    for (std::uint32_t i = 0; i < len; i++) (set[base + i] ? none : all) = false;
    if (none) return;
    if (all) {
        out.push_back(Cube{0, 0});
        return;
    }
    assert(var > 0);
    std::vector<Cube> lo, hi;
    cover_rec(set, base, var - 1, lo);
    cover_rec(set, base + (len >> 1), var - 1, hi);
    std::uint32_t bit = len >> 1;
    for (const Cube& c : lo) {
        auto it = std::find(hi.begin(), hi.end(), c);
        if (it != hi.end()) {
            out.push_back(c);  // var - 1 is don't-care
            hi.erase(it);
        } else {
            out.push_back(Cube{c.mask | bit, c.value});
        }
    }
    for (const Cube& c : hi) out.push_back(Cube{c.mask | bit, c.value | bit});
}

}  // namespace

std::vector<Cube> cube_cover(const std::vector<char>& set, int n_vars) {
    assert((int)set.size() == 1 << n_vars);
    std::vector<Cube> out;
    if (n_vars == 0) {
        if (set[0]) out.push_back(Cube{0, 0});
        return out;
    }
    cover_rec(set, 0, n_vars, out);
    std::sort(out.begin(), out.end(), [](const Cube& a, const Cube& b) {
        return a.value != b.value ? a.value < b.value : a.mask < b.mask;
    });
    return out;
}

std::string cube_to_string(const Cube& c, const std::vector<std::string>& names) {
    if (c.mask == 0) return "true";
    std::string out;
    for (std::size_t i = 0; i < names.size(); i++) {
        if (!(c.mask >> i & 1)) continue;
        if (!out.empty()) out += " & ";
        if (!(c.value >> i & 1)) out += "!";
        out += names[i];
    }
    return out;
}

}  // namespace pgsynth
