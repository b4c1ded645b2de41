#include "pgsynth/formula.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pgsynth {

Alphabet::Alphabet(std::vector<std::string> ins, std::vector<std::string> outs) {
    n_in_ = (int)ins.size();
    names_ = std::move(ins);
    names_.insert(names_.end(), outs.begin(), outs.end());
    if ((int)names_.size() > kMaxProps)
        throw std::invalid_argument("alphabet exceeds " + std::to_string(kMaxProps) + " propositions");
    for (std::size_t i = 0; i < names_.size(); i++)
        for (std::size_t j = i + 1; j < names_.size(); j++)
            if (names_[i] == names_[j])
                throw std::invalid_argument("duplicate proposition name: " + names_[i]);
}

int Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); i++)
        if (names_[i] == name) return (int)i;
    return -1;
}

namespace {

std::size_t node_hash(Kind k, bool neg, int ap, const std::vector<Formula>& kids) {
    std::size_t h = (std::size_t)k * 0x9e3779b97f4a7c15ull + (neg ? 0x2545f4914f6cdd1dull : 0) + (std::size_t)(ap + 1) * 0xff51afd7ed558ccdull;
    for (const Formula& f : kids) h = h * 0xc2b2ae3d27d4eb4full + f.hash();
    return h;
}

struct NodeKey {
    const Formula::Node* n;
    bool operator==(const NodeKey& o) const {
        return n->kind == o.n->kind && n->neg == o.n->neg && n->ap == o.n->ap && n->kids == o.n->kids;
    }
};
struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const { return k.n->hash; }
};

}  // namespace

struct FormulaInterner {
    std::mutex mu;
    std::deque<Formula::Node> store;
    std::unordered_set<NodeKey, NodeKeyHash> table;

    static FormulaInterner& instance() {
        static FormulaInterner* it = new FormulaInterner;
        return *it;
    }

    Formula intern(Kind k, bool neg, int ap, std::vector<Formula> kids) {
        Formula::Node probe{k, neg, ap, std::move(kids), 0};
        probe.hash = node_hash(k, neg, ap, probe.kids);
        std::lock_guard<std::mutex> lock(mu);
        auto it = table.find(NodeKey{&probe});
        if (it != table.end()) return Formula(it->n);
        store.push_back(std::move(probe));
        const Formula::Node* n = &store.back();
        table.insert(NodeKey{n});
        return Formula(n);
    }
};

Formula Formula::tt() {
    static Formula f = FormulaInterner::instance().intern(Kind::TT, false, -1, {});
    return f;
}
Formula Formula::ff() {
    static Formula f = FormulaInterner::instance().intern(Kind::FF, false, -1, {});
    return f;
}
Formula Formula::lit(int ap, bool negated) {
    return FormulaInterner::instance().intern(Kind::Lit, negated, ap, {});
}
Formula Formula::make(Kind k, std::vector<Formula> kids) {
    switch (k) {
        case Kind::TT: return tt();
        case Kind::FF: return ff();
        case Kind::Lit: assert(false); return tt();
        case Kind::X: assert(kids.size() == 1); break;
        case Kind::U:
        case Kind::R:
        case Kind::Iff: assert(kids.size() == 2); break;
        case Kind::And:
        case Kind::Or:
            assert(kids.size() >= 1);
            if (kids.size() == 1) return kids[0];
            break;
    }
    return FormulaInterner::instance().intern(k, false, -1, std::move(kids));
}

int Formula::compare(Formula a, Formula b) {
    if (a == b) return 0;
    if (a.kind() != b.kind()) return (int)a.kind() < (int)b.kind() ? -1 : 1;
    if (a.kind() == Kind::Lit) {
        if (a.ap() != b.ap()) return a.ap() < b.ap() ? -1 : 1;
        return a.negated() < b.negated() ? -1 : 1;
    }
    auto ka = a.kids(), kb = b.kids();
    std::size_t n = std::min(ka.size(), kb.size());
    for (std::size_t i = 0; i < n; i++)
        if (int c = compare(ka[i], kb[i]); c != 0) return c;
    if (ka.size() != kb.size()) return ka.size() < kb.size() ? -1 : 1;
    return 0;  // unreachable for interned values
}

Formula nnf_not(Formula f) {
    switch (f.kind()) {
        case Kind::TT: return Formula::ff();
        case Kind::FF: return Formula::tt();
        case Kind::Lit: return Formula::lit(f.ap(), !f.negated());
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> kids;
            kids.reserve(f.kids().size());
            for (Formula k : f.kids()) kids.push_back(nnf_not(k));
            return Formula::make(f.kind() == Kind::And ? Kind::Or : Kind::And, std::move(kids));
        }
        case Kind::Iff: return Formula::iff(f.kid(0), nnf_not(f.kid(1)));
        case Kind::X: return Formula::next(nnf_not(f.kid(0)));
        case Kind::U: return Formula::release(nnf_not(f.kid(0)), nnf_not(f.kid(1)));
        case Kind::R: return Formula::until(nnf_not(f.kid(0)), nnf_not(f.kid(1)));
    }
    return f;
}

namespace {

// conjuncts of an And node, or the formula itself; dually for Or
std::span<const Formula> parts(Formula f, Kind k, const Formula* self) {
    if (f.is(k)) return f.kids();
    return {self, 1};
}

// is every element of sub also in sup? both sorted by Formula::compare
bool subset_of(std::span<const Formula> sub, std::span<const Formula> sup) {
    std::size_t j = 0;
    for (const Formula& x : sub) {
        while (j < sup.size() && Formula::compare(sup[j], x) < 0) j++;
        if (j == sup.size() || sup[j] != x) return false;
    }
    return true;
}

Formula simplify_nary(Kind k, std::vector<Formula> kids) {
    // k is And or Or; kids already simplified
    const Formula unit = k == Kind::And ? Formula::tt() : Formula::ff();
    const Formula zero = k == Kind::And ? Formula::ff() : Formula::tt();
    std::vector<Formula> flat;
    for (Formula f : kids) {
        if (f == zero) return zero;
        if (f == unit) continue;
        if (f.is(k))
            flat.insert(flat.end(), f.kids().begin(), f.kids().end());
        else
            flat.push_back(f);
    }
    std::sort(flat.begin(), flat.end(), [](Formula a, Formula b) { return Formula::compare(a, b) < 0; });
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty()) return unit;
    // complementary literals cancel
    for (Formula f : flat)
        if (f.is(Kind::Lit) && std::binary_search(flat.begin(), flat.end(), Formula::lit(f.ap(), !f.negated()),
                                                  [](Formula a, Formula b) { return Formula::compare(a, b) < 0; }))
            return zero;
    // absorption: drop a child subsumed by another, e.g. (a&b)|a -> a.
    // For Or: drop x when conjuncts(y) is a subset of conjuncts(x) for some
    // other child y; dually for And with disjuncts.
    const Kind dual = k == Kind::And ? Kind::Or : Kind::And;
    std::vector<Formula> kept;
    for (std::size_t i = 0; i < flat.size(); i++) {
        bool drop = false;
        auto pi = parts(flat[i], dual, &flat[i]);
        for (std::size_t j = 0; j < flat.size() && !drop; j++) {
            if (i == j) continue;
            auto pj = parts(flat[j], dual, &flat[j]);
            if (pj.size() < pi.size() || (pj.size() == pi.size() && j < i))
                if (subset_of(pj, pi)) drop = true;
        }
        if (!drop) kept.push_back(flat[i]);
    }
    if (kept.size() == 1) return kept[0];
    return Formula::make(k, std::move(kept));
}

Formula simplify_node(Formula f, bool exact);

// treat maximal temporal subformulas and propositions as variables and
// truth-table the boolean skeleton; returns 0 = contradiction, 1 = tautology,
// 2 = neither / too large
int prop_status(Formula f) {
    std::vector<Formula> vars;  // Lit vars are stored with positive polarity
    bool too_big = false;
    auto var_of = [&](Formula g) -> int {
        Formula key = g.is(Kind::Lit) ? Formula::lit(g.ap()) : g;
        for (std::size_t i = 0; i < vars.size(); i++)
            if (vars[i] == key) return (int)i;
        vars.push_back(key);
        return (int)vars.size() - 1;
    };
    auto collect = [&](auto&& self, Formula g) -> void {
        switch (g.kind()) {
            case Kind::TT:
            case Kind::FF: return;
            case Kind::And:
            case Kind::Or:
            case Kind::Iff:
                for (Formula k : g.kids()) self(self, k);
                return;
            default:
                if ((int)vars.size() > 20) { too_big = true; return; }
                var_of(g);
                return;
        }
    };
    collect(collect, f);
    if (too_big || vars.size() > 20) return 2;
    auto eval = [&](auto&& self, Formula g, std::uint32_t asg) -> bool {
        switch (g.kind()) {
            case Kind::TT: return true;
            case Kind::FF: return false;
            case Kind::And:
                for (Formula k : g.kids())
                    if (!self(self, k, asg)) return false;
                return true;
            case Kind::Or:
                for (Formula k : g.kids())
                    if (self(self, k, asg)) return true;
                return false;
            case Kind::Iff: return self(self, g.kid(0), asg) == self(self, g.kid(1), asg);
            case Kind::Lit: {
                bool v = (asg >> var_of(g)) & 1;
                return g.negated() ? !v : v;
            }
            default: return (asg >> var_of(g)) & 1;
        }
    };
    bool any_true = false, any_false = false;
    for (std::uint32_t asg = 0; asg < (1u << vars.size()); asg++) {
        (eval(eval, f, asg) ? any_true : any_false) = true;
        if (any_true && any_false) return 2;
    }
    return any_true ? 1 : 0;
}

Formula simplify_node(Formula f, bool exact) {
    switch (f.kind()) {
        case Kind::TT:
        case Kind::FF:
        case Kind::Lit: return f;
        default: break;
    }
    std::vector<Formula> kids;
    kids.reserve(f.kids().size());
    for (Formula k : f.kids()) kids.push_back(simplify_node(k, exact));
    Formula r;
    switch (f.kind()) {
        case Kind::And:
        case Kind::Or: r = simplify_nary(f.kind(), std::move(kids)); break;
        case Kind::X:
            r = kids[0].is_tt() || kids[0].is_ff() ? kids[0] : Formula::next(kids[0]);
            break;
        case Kind::U: {
            Formula a = kids[0], b = kids[1];
            if (b.is_tt() || b.is_ff() || a == b) r = b;
            else if (a.is_ff()) r = b;
            else r = Formula::until(a, b);
            break;
        }
        case Kind::R: {
            Formula a = kids[0], b = kids[1];
            if (b.is_tt() || b.is_ff() || a == b) r = b;
            else if (a.is_tt()) r = b;
            else r = Formula::release(a, b);
            break;
        }
        case Kind::Iff: {
            Formula a = kids[0], b = kids[1];
            if (a == b) r = Formula::tt();
            else if (a == nnf_not(b)) r = Formula::ff();
            else if (a.is_tt()) r = b;
            else if (b.is_tt()) r = a;
            else if (a.is_ff()) r = simplify_node(nnf_not(b), exact);
            else if (b.is_ff()) r = simplify_node(nnf_not(a), exact);
            else r = Formula::iff(a, b);
            break;
        }
        default: r = f; break;
    }
    if (exact && !r.is_tt() && !r.is_ff()) {
        switch (prop_status(r)) {
            case 0: return Formula::ff();
            case 1: return Formula::tt();
            default: break;
        }
    }
    return r;
}

}  // namespace

Formula simplify(Formula f) { return simplify_node(f, false); }
Formula simplify_exact(Formula f) { return simplify_node(f, true); }

namespace {

// Blake canonical form of the Boolean skeleton: the disjunction of all prime
// implicants over the propositions and maximal temporal subformulas. Two
// equivalent skeletons over the same variables map to the identical formula,
// which keeps the af-iterate state spaces finite (plain simplify lets
// unfoldings like b | (c & (b | (c & ...))) nest without bound).
Formula canon_uncached(Formula f) {
    Formula s = simplify(f);
    if (s.is_tt() || s.is_ff()) return s;
    std::vector<Formula> vars;
    bool too_big = false;
    auto collect = [&](auto&& self, Formula g) -> void {
        switch (g.kind()) {
            case Kind::TT:
            case Kind::FF: return;
            case Kind::And:
            case Kind::Or:
            case Kind::Iff:
                for (Formula k : g.kids()) self(self, k);
                return;
            default: {
                Formula key = g.is(Kind::Lit) ? Formula::lit(g.ap()) : g;
                for (const Formula& v : vars)
                    if (v == key) return;
                if (vars.size() >= 10) { too_big = true; return; }
                vars.push_back(key);
                return;
            }
        }
    };
    collect(collect, s);
    if (too_big) return s;
    std::sort(vars.begin(), vars.end(),
              [](Formula a, Formula b) { return Formula::compare(a, b) < 0; });
    int n = (int)vars.size();
    auto var_of = [&](Formula g) {
        Formula key = g.is(Kind::Lit) ? Formula::lit(g.ap()) : g;
        for (int i = 0; i < n; i++)
            if (vars[i] == key) return i;
        return -1;
    };
    auto eval = [&](auto&& self, Formula g, std::uint32_t asg) -> bool {
        switch (g.kind()) {
            case Kind::TT: return true;
            case Kind::FF: return false;
            case Kind::And:
                for (Formula k : g.kids())
                    if (!self(self, k, asg)) return false;
                return true;
            case Kind::Or:
                for (Formula k : g.kids())
                    if (self(self, k, asg)) return true;
                return false;
            case Kind::Iff: return self(self, g.kid(0), asg) == self(self, g.kid(1), asg);
            case Kind::Lit: {
                bool v = (asg >> var_of(g)) & 1;
                return g.negated() ? !v : v;
            }
            default: return (asg >> var_of(g)) & 1;
        }
    };
    std::uint32_t all = 1u << n;
    std::vector<char> tab(all);
    bool any = false, every = true;
    for (std::uint32_t a = 0; a < all; a++) {
        tab[a] = eval(eval, s, a);
        any |= tab[a];
        every &= (bool)tab[a];
    }
    if (!any) return Formula::ff();
    if (every) return Formula::tt();
    std::uint32_t full = all - 1;
    auto implicant = [&](std::uint32_t mask, std::uint32_t value) {
        std::uint32_t free = full & ~mask;
        for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
            if (!tab[value | sub]) return false;
            if (sub == 0) return true;
        }
    };
    std::vector<Formula> terms;
    for (std::uint32_t mask = 0; mask <= full; mask++)
        for (std::uint32_t value = mask;; value = (value - 1) & mask) {
            if (implicant(mask, value)) {
                bool prime = true;
                for (int b = 0; b < n && prime; b++)
                    if ((mask >> b) & 1)
                        prime = !implicant(mask & ~(1u << b), value & ~(1u << b));
                if (prime) {
                    std::vector<Formula> lits;
                    for (int b = 0; b < n; b++) {
                        if (!((mask >> b) & 1)) continue;
                        bool pos = (value >> b) & 1;
                        if (vars[b].is(Kind::Lit))
                            lits.push_back(Formula::lit(vars[b].ap(), !pos));
                        else
                            lits.push_back(pos ? vars[b] : nnf_not(vars[b]));
                    }
                    terms.push_back(Formula::conj(std::move(lits)));
                }
            }
            if (value == 0) break;
        }
    return simplify(Formula::disj(std::move(terms)));
}

}  // namespace

Formula canon(Formula f) {
    static std::unordered_map<Formula, Formula, FormulaHash> cache;
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
    Formula r = canon_uncached(f);
    cache.emplace(f, r);
    return r;
}

namespace {

Formula af_raw(Formula phi, Letter nu) {
    switch (phi.kind()) {
        case Kind::TT:
        case Kind::FF: return phi;
        case Kind::Lit: {
            bool holds = (nu >> phi.ap()) & 1;
            if (phi.negated()) holds = !holds;
            return holds ? Formula::tt() : Formula::ff();
        }
        case Kind::And:
        case Kind::Or: {
            std::vector<Formula> kids;
            kids.reserve(phi.kids().size());
            for (Formula k : phi.kids()) kids.push_back(af_raw(k, nu));
            return Formula::make(phi.kind(), std::move(kids));
        }
        case Kind::X: return phi.kid(0);
        case Kind::U:
            return Formula::disj({af_raw(phi.kid(1), nu), Formula::conj({af_raw(phi.kid(0), nu), phi})});
        case Kind::R:
            return Formula::conj({af_raw(phi.kid(1), nu), Formula::disj({af_raw(phi.kid(0), nu), phi})});
        case Kind::Iff: throw std::logic_error("af: Iff under derivative");
    }
    return phi;
}

}  // namespace

Formula af(Formula phi, Letter nu) { return simplify(af_raw(phi, nu)); }

bool in_mu(Formula f) {
    if (f.is(Kind::R) || f.is(Kind::Iff)) return false;
    for (Formula k : f.kids())
        if (!in_mu(k)) return false;
    return true;
}
bool in_nu(Formula f) {
    if (f.is(Kind::U) || f.is(Kind::Iff)) return false;
    for (Formula k : f.kids())
        if (!in_nu(k)) return false;
    return true;
}

namespace {

// precedence: Iff 0, Or 1, And 2, U/R 3, unary 4
int prec(Formula f) {
    switch (f.kind()) {
        case Kind::Iff: return 0;
        case Kind::Or: return 1;
        case Kind::And: return 2;
        case Kind::U:
        case Kind::R: return f.is_F() || f.is_G() ? 4 : 3;
        default: return 4;
    }
}

void print(Formula f, const Alphabet& s, int parent_prec, std::string& out) {
    int p = prec(f);
    bool paren = p < parent_prec;
    if (paren) out += "(";
    switch (f.kind()) {
        case Kind::TT: out += "tt"; break;
        case Kind::FF: out += "ff"; break;
        case Kind::Lit:
            if (f.negated()) out += "!";
            out += s.name(f.ap());
            break;
        case Kind::And:
        case Kind::Or: {
            const char* op = f.is(Kind::And) ? " & " : " | ";
            for (std::size_t i = 0; i < f.kids().size(); i++) {
                if (i) out += op;
                print(f.kid(i), s, p + 1, out);
            }
            break;
        }
        case Kind::Iff:
            print(f.kid(0), s, p + 1, out);
            out += " <-> ";
            print(f.kid(1), s, p + 1, out);
            break;
        case Kind::X:
            out += "X ";
            print(f.kid(0), s, p, out);
            break;
        case Kind::U:
        case Kind::R:
            if (f.is_F() || f.is_G()) {
                out += f.is_F() ? "F " : "G ";
                print(f.kid(1), s, 4, out);
            } else {
                print(f.kid(0), s, p + 1, out);
                out += f.is(Kind::U) ? " U " : " R ";
                print(f.kid(1), s, p, out);
            }
            break;
    }
    if (paren) out += ")";
}

}  // namespace

std::string to_string(Formula f, const Alphabet& sigma) {
    std::string out;
    print(f, sigma, 0, out);
    return out;
}

}  // namespace pgsynth
