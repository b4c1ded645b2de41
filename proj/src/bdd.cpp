#include "pgsynth/bdd.hpp"

#include <algorithm>
#include <cassert>

namespace pgsynth {

Bdd::Bdd(int n_vars) : n_vars_(n_vars) {
    nodes_.push_back({n_vars_, 0, 0});  // false
    nodes_.push_back({n_vars_, 1, 1});  // true
}

Bdd::Ref Bdd::mk(int var, Ref lo, Ref hi) {
    if (lo == hi) return lo;
    auto key = std::tuple(var, lo, hi);
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    Ref r = (int)nodes_.size();
    nodes_.push_back({var, lo, hi});
    unique_.emplace(key, r);
    return r;
}

Bdd::Ref Bdd::var(int v) { return mk(v, 0, 1); }
Bdd::Ref Bdd::nvar(int v) { return mk(v, 1, 0); }

Bdd::Ref Bdd::cofactor(Ref f, int var, bool val) {
    if (nodes_[f].var != var) return f;
    return val ? nodes_[f].hi : nodes_[f].lo;
}

Bdd::Ref Bdd::ite(Ref f, Ref g, Ref h) {
    if (f == 1) return g;
    if (f == 0) return h;
    if (g == h) return g;
    if (g == 1 && h == 0) return f;
    auto key = std::tuple(f, g, h);
    auto it = ite_cache_.find(key);
    if (it != ite_cache_.end()) return it->second;
    int v = std::min({nodes_[f].var, nodes_[g].var, nodes_[h].var});
    Ref lo = ite(cofactor(f, v, false), cofactor(g, v, false), cofactor(h, v, false));
    Ref hi = ite(cofactor(f, v, true), cofactor(g, v, true), cofactor(h, v, true));
    Ref r = mk(v, lo, hi);
    ite_cache_.emplace(key, r);
    return r;
}

Bdd::Ref Bdd::restrict(Ref f, Ref care) {
    if (care == 0) return 0;  // care set empty: anything goes
    if (care == 1 || is_const(f)) return f;
    auto key = std::pair(f, care);
    auto it = restrict_cache_.find(key);
    if (it != restrict_cache_.end()) return it->second;
    Ref r;
    int vf = nodes_[f].var, vc = nodes_[care].var;
    if (vc < vf) {
        // f does not depend on vc: merge the care branches
        r = restrict(f, bor(nodes_[care].lo, nodes_[care].hi));
    } else {
        int v = vf;
        Ref c0 = cofactor(care, v, false), c1 = cofactor(care, v, true);
        if (c0 == 0) {
            r = restrict(nodes_[f].hi, c1);
        } else if (c1 == 0) {
            r = restrict(nodes_[f].lo, c0);
        } else {
            r = mk(v, restrict(nodes_[f].lo, c0), restrict(nodes_[f].hi, c1));
        }
    }
    restrict_cache_.emplace(key, r);
    return r;
}

Bdd::Ref Bdd::minterm(const std::vector<int>& vars, std::uint32_t bits) {
    Ref r = 1;
    // build bottom-up in reverse order for linear node count
    std::vector<int> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    for (int i = (int)sorted.size() - 1; i >= 0; i--) {
        std::size_t pos = std::find(vars.begin(), vars.end(), sorted[i]) - vars.begin();
        bool val = bits >> pos & 1;
        r = val ? mk(sorted[i], 0, r) : mk(sorted[i], r, 0);
    }
    return r;
}

bool Bdd::eval(Ref r, const std::vector<char>& assignment) const {
    while (r > 1) r = assignment[nodes_[r].var] ? nodes_[r].hi : nodes_[r].lo;
    return r == 1;
}

}  // namespace pgsynth
