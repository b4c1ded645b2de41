// Small reduced ordered BDD manager with a fixed variable order, used only
// for circuit lowering. No complement edges, no reordering.
#ifndef PGSYNTH_BDD_HPP
#define PGSYNTH_BDD_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace pgsynth {

class Bdd {
public:
    using Ref = int;  // 0 = constant false, 1 = constant true

    explicit Bdd(int n_vars);

    static Ref zero() { return 0; }
    static Ref one() { return 1; }
    bool is_const(Ref r) const { return r <= 1; }

    Ref var(int v);
    Ref nvar(int v);
    Ref ite(Ref f, Ref g, Ref h);
    Ref band(Ref a, Ref b) { return ite(a, b, zero()); }
    Ref bor(Ref a, Ref b) { return ite(a, one(), b); }
    Ref bnot(Ref a) { return ite(a, zero(), one()); }
    Ref bxor(Ref a, Ref b) { return ite(a, bnot(b), b); }

    // Coudert/Madre-style restrict: some function agreeing with f on the
    // care set, typically smaller than f
    Ref restrict(Ref f, Ref care);

    // cube of a full assignment over the given variables
    Ref minterm(const std::vector<int>& vars, std::uint32_t bits);

    int top_var(Ref r) const { return nodes_[r].var; }
    Ref lo(Ref r) const { return nodes_[r].lo; }
    Ref hi(Ref r) const { return nodes_[r].hi; }
    bool eval(Ref r, const std::vector<char>& assignment) const;

private:
    struct Node {
        int var;
        Ref lo, hi;
    };
    int n_vars_;
    std::vector<Node> nodes_;
    std::map<std::tuple<int, Ref, Ref>, Ref> unique_;
    std::map<std::tuple<Ref, Ref, Ref>, Ref> ite_cache_;
    std::map<std::pair<Ref, Ref>, Ref> restrict_cache_;

    Ref mk(int var, Ref lo, Ref hi);
    Ref cofactor(Ref f, int var, bool val);
};

}  // namespace pgsynth

#endif
