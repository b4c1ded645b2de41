#include "pgsynth/automata.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace pgsynth {
namespace detail {

namespace {

// fraction of satisfying assignments of the boolean skeleton, treating
// propositions and maximal temporal subformulas as variables
double model_fraction(Formula f) {
    if (f.is_tt()) return 1.0;
    if (f.is_ff()) return 0.0;
    std::vector<Formula> vars;
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
                for (Formula k : g.kids()) self(self, k);
                return;
            default:
                if ((int)vars.size() > 20) { too_big = true; return; }
                var_of(g);
                return;
        }
    };
    collect(collect, f);
    if (too_big || vars.size() > 20) return 0.5;
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
            case Kind::Lit: {
                bool v = (asg >> var_of(g)) & 1;
                return g.negated() ? !v : v;
            }
            default: return (asg >> var_of(g)) & 1;
        }
    };
    std::uint64_t models = 0, total = 1ull << vars.size();
    for (std::uint64_t asg = 0; asg < total; asg++)
        if (eval(eval, f, (std::uint32_t)asg)) models++;
    return (double)models / (double)total;
}

double log_half(double s) { return std::log(s) / std::log(0.5); }

// conjunction aggregation with the s in {0,1} guard
Score agg_conj(const std::vector<Score>& cs) {
    double w_sum = 0, ws_sum = 0;
    for (const Score& c : cs) {
        double w = c.w;
        if (c.s > 0 && c.s < 1) w *= log_half(c.s);
        w_sum += w;
        ws_sum += w * c.s;
    }
    if (w_sum <= 0) return {1.0, 0.5};
    return {w_sum, ws_sum / w_sum};
}

// bi-implication aggregation: max-of-logs reweighting
Score agg_iff(const std::vector<Score>& cs) {
    double w_sum = 0, ws_sum = 0;
    for (const Score& c : cs) {
        double w = c.w;
        if (c.s > 0 && c.s < 1) w *= std::max(log_half(c.s), log_half(1 - c.s));
        w_sum += w;
        ws_sum += w * c.s;
    }
    if (w_sum <= 0) return {1.0, 0.5};
    return {w_sum, ws_sum / w_sum};
}

}  // namespace

class Aut {
public:
    int p = 0;       // parity
    int d = 1;       // maximal colour
    bool weak = false;

    virtual ~Aut() = default;
    virtual State initial() const = 0;
    virtual StepOut step(const State& q, Letter nu) const = 0;
    virtual Score score(const State& q, Letter nu) const = 0;

    int good() const { return p; }
    int bad() const { return p ^ 1; }
    StepOut sink_step(const State& q) const { return {q, q.is_bot() ? bad() : good()}; }
    static Score sink_score(const State& q) { return {1.0, q.is_bot() ? 0.0 : 1.0}; }
};

using AutPtr = std::unique_ptr<Aut>;

// ---- base translators -------------------------------------------------------

class WeakLeafAut final : public Aut {
public:
    WeakLeafAut(Formula phi, int parity) : phi_(canon(phi)), nu_(in_nu(phi_)) {
        p = parity;
        d = 1;
        weak = true;
    }

    State initial() const override {
        if (phi_.is_tt()) return State::top();
        if (phi_.is_ff()) return State::bot();
        return State::wleaf(phi_);
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        Formula f = canon(af(q.u(), nu));
        if (f.is_tt()) return {State::top(), good()};
        if (f.is_ff()) return {State::bot(), bad()};
        return {State::wleaf(f), nu_ ? good() : bad()};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut s = step(q, nu);
        if (s.q.is_sink()) return sink_score(s.q);
        return {1.0, model_fraction(s.q.u())};
    }

private:
    Formula phi_;
    bool nu_;
};

// Buchi base for G psi, psi in muLTL. Breakpoint pair (u, v): u holds the
// obligations under watch, v those accrued since the watch started; a
// breakpoint (u discharged to tt) emits colour 0 and moves v under watch.
class BuchiLeafAut final : public Aut {
public:
    explicit BuchiLeafAut(Formula psi) : psi_(canon(psi)) {
        p = 0;
        d = 1;
    }

    State initial() const override {
        if (psi_.is_tt()) return State::top();
        if (psi_.is_ff()) return State::bot();
        return State::bleaf(psi_, Formula::tt());
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        Formula u1 = canon(af(q.u(), nu));
        Formula w = canon(af(Formula::conj({q.v(), psi_}), nu));
        if (u1.is_ff() || w.is_ff()) return {State::bot(), 1};
        if (u1.is_tt()) return {pair(w, Formula::tt()), 0};
        return {pair(u1, w), 1};
    }

    // canonical pair: conjuncts of v also watched in u are dropped (they
    // evolve identically under af), and a fully discharged pair is the
    // initial state again
    State pair(Formula u, Formula v) const {
        auto conjuncts = [](Formula f) {
            std::vector<Formula> out;
            if (f.is(Kind::And)) {
                out.assign(f.kids().begin(), f.kids().end());
            } else if (!f.is_tt()) {
                out.push_back(f);
            }
            return out;
        };
        std::vector<Formula> us = conjuncts(u), keep;
        for (Formula c : conjuncts(v))
            if (std::find(us.begin(), us.end(), c) == us.end()) keep.push_back(c);
        Formula v2 = keep.empty() ? Formula::tt() : simplify(Formula::conj(std::move(keep)));
        if (u.is_tt()) return State::bleaf(psi_, Formula::tt());
        return State::bleaf(u, v2);
    }

    Score score(const State& q, Letter nu) const override {
        StepOut s = step(q, nu);
        if (s.q.is_sink()) return sink_score(s.q);
        return {1.0, model_fraction(simplify(Formula::conj({s.q.u(), s.q.v()})))};
    }

private:
    Formula psi_;
};

// ---- wrappers ---------------------------------------------------------------

// parity switch: complements the language; Bot and Top swap roles
class ComplementAut final : public Aut {
public:
    explicit ComplementAut(AutPtr inner) : in_(std::move(inner)) {
        p = in_->p ^ 1;
        d = in_->d;
        weak = in_->weak;
    }

    static State swap_sinks(const State& s) {
        if (s.is_bot()) return State::top();
        if (s.is_top()) return State::bot();
        return s;
    }

    State initial() const override { return swap_sinks(in_->initial()); }

    StepOut step(const State& q, Letter nu) const override {
        StepOut s = in_->step(swap_sinks(q), nu);
        return {swap_sinks(s.q), s.colour};
    }

    Score score(const State& q, Letter nu) const override {
        Score s = in_->score(swap_sinks(q), nu);
        return {s.w, 1.0 - s.s};
    }

    const Aut* inner() const { return in_.get(); }

private:
    AutPtr in_;
};

// parity switch preserving the language: every colour is shifted by one
class ColourShiftAut final : public Aut {
public:
    explicit ColourShiftAut(AutPtr inner) : in_(std::move(inner)) {
        p = in_->p ^ 1;
        d = in_->d + 1;
        weak = false;
    }

    State initial() const override { return in_->initial(); }
    StepOut step(const State& q, Letter nu) const override {
        StepOut s = in_->step(q, nu);
        return {s.q, s.colour + 1};
    }
    Score score(const State& q, Letter nu) const override { return in_->score(q, nu); }

private:
    AutPtr in_;
};

// parity switch for weak automata: colours are complemented, no new colour
class WeakFlipAut final : public Aut {
public:
    explicit WeakFlipAut(AutPtr inner) : in_(std::move(inner)) {
        assert(in_->weak && in_->d == 1);
        p = in_->p ^ 1;
        d = 1;
        weak = true;
    }

    State initial() const override { return in_->initial(); }
    StepOut step(const State& q, Letter nu) const override {
        StepOut s = in_->step(q, nu);
        return {s.q, 1 - s.colour};
    }
    Score score(const State& q, Letter nu) const override { return in_->score(q, nu); }

private:
    AutPtr in_;
};

// ---- products ---------------------------------------------------------------

class CompositeAut : public Aut {
public:
    std::vector<AutPtr> ch;

protected:
    // sink simplification for conjunction-shaped products
    static bool conj_sink(const std::vector<State>& succs, State& out) {
        bool all_top = true;
        for (const State& s : succs) {
            if (s.is_bot()) { out = State::bot(); return true; }
            if (!s.is_top()) all_top = false;
        }
        if (all_top) { out = State::top(); return true; }
        return false;
    }

    std::vector<State> child_initials() const {
        std::vector<State> v;
        v.reserve(ch.size());
        for (const auto& a : ch) v.push_back(a->initial());
        return v;
    }

    std::vector<StepOut> child_steps(const State& q, Letter nu) const {
        std::vector<StepOut> v;
        v.reserve(ch.size());
        for (std::size_t i = 0; i < ch.size(); i++) v.push_back(ch[i]->step(q.kid((int)i), nu));
        return v;
    }

    std::vector<Score> child_scores(const State& q, Letter nu) const {
        std::vector<Score> v;
        v.reserve(ch.size());
        for (std::size_t i = 0; i < ch.size(); i++) v.push_back(ch[i]->score(q.kid((int)i), nu));
        return v;
    }
};

// conjunction filtered by a weak child: the composite inherits the second
// child's acceptance; a rejecting weak transition emits the hostile colour
class WeakFilterConj final : public CompositeAut {
public:
    WeakFilterConj(AutPtr a, AutPtr b, int weak_idx) : wi_(weak_idx) {
        ch.push_back(std::move(a));
        ch.push_back(std::move(b));
        const Aut& other = *ch[1 - wi_];
        p = other.p;
        d = other.d;
        weak = ch[0]->weak && ch[1]->weak;
    }

    State initial() const override {
        auto init = child_initials();
        State s;
        if (conj_sink(init, s)) return s;
        return State::node(std::move(init));
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        auto s = child_steps(q, nu);
        std::vector<State> succs{s[0].q, s[1].q};
        State sink;
        if (conj_sink(succs, sink)) return {sink, sink.is_bot() ? bad() : good()};
        bool weak_ok = s[wi_].colour == ch[wi_]->p;
        int colour = weak_ok ? s[1 - wi_].colour : bad();
        return {State::node(std::move(succs)), colour};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut nx = step(q, nu);
        if (nx.q.is_sink()) return sink_score(nx.q);
        return agg_conj(child_scores(q, nu));
    }

private:
    int wi_;
};

// conjunction filtered by a co-Buchi child (p=1, d=1); the other child is
// pre-arranged to parity 1; a hostile co-Buchi transition forces colour 0
class CoBuchiFilterConj final : public CompositeAut {
public:
    CoBuchiFilterConj(AutPtr a, AutPtr b, int cb_idx) : ci_(cb_idx) {
        ch.push_back(std::move(a));
        ch.push_back(std::move(b));
        assert(ch[ci_]->p == 1 && ch[ci_]->d == 1);
        assert(ch[1 - ci_]->p == 1);
        p = 1;
        d = ch[1 - ci_]->d;
    }

    State initial() const override {
        auto init = child_initials();
        State s;
        if (conj_sink(init, s)) return s;
        return State::node(std::move(init));
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        auto s = child_steps(q, nu);
        std::vector<State> succs{s[0].q, s[1].q};
        State sink;
        if (conj_sink(succs, sink)) return {sink, sink.is_bot() ? bad() : good()};
        int colour = s[ci_].colour == 0 ? 0 : s[1 - ci_].colour;
        return {State::node(std::move(succs)), colour};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut nx = step(q, nu);
        if (nx.q.is_sink()) return sink_score(nx.q);
        return agg_conj(child_scores(q, nu));
    }

private:
    int ci_;
};

// n-ary Buchi conjunction with a round-robin counter
class RoundRobinConj final : public CompositeAut {
public:
    explicit RoundRobinConj(std::vector<AutPtr> kids) {
        ch = std::move(kids);
        for (auto& a : ch) assert(a->p == 0 && a->d == 1);
        p = 0;
        d = 1;
    }

    State initial() const override {
        auto init = child_initials();
        State s;
        if (conj_sink(init, s)) return s;
        return State::node(std::move(init), 0);
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        auto s = child_steps(q, nu);
        std::vector<State> succs;
        succs.reserve(s.size());
        for (auto& x : s) succs.push_back(x.q);
        State sink;
        if (conj_sink(succs, sink)) return {sink, sink.is_bot() ? 1 : 0};
        int n = (int)ch.size();
        int r = q.aux();
        int r2 = r;
        while (r2 < n && s[r2].colour == 0) r2++;
        int colour = r2 == n ? 0 : 1;
        return {State::node(std::move(succs), r2 % n), colour};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut nx = step(q, nu);
        if (nx.q.is_sink()) return sink_score(nx.q);
        auto cs = child_scores(q, nu);
        auto s = child_steps(q, nu);
        int n = (int)ch.size();
        int r = q.aux();
        int r2 = r;
        while (r2 < n && s[r2].colour == 0) r2++;
        for (int i = r; i < r2; i++) {
            cs[i].w *= 2;
            cs[i].s = (3 + cs[i].s) / 4;
        }
        return agg_conj(cs);
    }
};

// Buchi x parity conjunction with a minimal-colour memory: remember the least
// colour of the parity child between acceptances of the Buchi child
class ColourMemoryConj final : public CompositeAut {
public:
    ColourMemoryConj(AutPtr a, AutPtr b, int buchi_idx) : bi_(buchi_idx) {
        ch.push_back(std::move(a));
        ch.push_back(std::move(b));
        assert(ch[bi_]->p == 0 && ch[bi_]->d == 1);
        assert(ch[1 - bi_]->p == 1);
        d2_ = ch[1 - bi_]->d;
        d = d2_ % 2 == 0 ? d2_ : d2_ + 1;
        p = 1;
    }

    State initial() const override {
        auto init = child_initials();
        State s;
        if (conj_sink(init, s)) return s;
        return State::node(std::move(init), d2_);
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        auto s = child_steps(q, nu);
        std::vector<State> succs{s[0].q, s[1].q};
        State sink;
        if (conj_sink(succs, sink)) return {sink, sink.is_bot() ? bad() : good()};
        int c2 = std::min(q.aux(), s[1 - bi_].colour);
        bool accept_b = s[bi_].colour == 0;
        int colour = accept_b ? c2 : d;
        int mem = accept_b ? d2_ : c2;
        return {State::node(std::move(succs), mem), colour};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut nx = step(q, nu);
        if (nx.q.is_sink()) return sink_score(nx.q);
        auto cs = child_scores(q, nu);
        auto s = child_steps(q, nu);
        int c2 = std::min(q.aux(), s[1 - bi_].colour);
        if (c2 < q.aux()) {
            cs[1 - bi_].w *= 2;
            cs[1 - bi_].s = c2 % 2 == p ? (3 + cs[1 - bi_].s) / 4 : cs[1 - bi_].s / 4;
        }
        return agg_conj(cs);
    }

private:
    int bi_;
    int d2_;
};

// bi-implication sink rule: both children in a sink decides the product
static bool iff_sink(const std::vector<State>& succs, State& out) {
    if (succs[0].is_sink() && succs[1].is_sink()) {
        out = succs[0] == succs[1] ? State::top() : State::bot();
        return true;
    }
    return false;
}

// bi-implication of two weak automata with aligned parities
class WeakIffAut final : public CompositeAut {
public:
    WeakIffAut(AutPtr a, AutPtr b) {
        ch.push_back(std::move(a));
        ch.push_back(std::move(b));
        assert(ch[0]->weak && ch[1]->weak && ch[0]->p == ch[1]->p);
        p = 0;
        d = 1;
        weak = true;
    }

    State initial() const override {
        auto init = child_initials();
        State s;
        if (iff_sink(init, s)) return s;
        return State::node(std::move(init));
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        auto s = child_steps(q, nu);
        std::vector<State> succs{s[0].q, s[1].q};
        State sink;
        if (iff_sink(succs, sink)) return {sink, sink.is_bot() ? bad() : good()};
        return {State::node(std::move(succs)), (s[0].colour + s[1].colour) % 2};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut nx = step(q, nu);
        if (nx.q.is_sink()) return sink_score(nx.q);
        return agg_iff(child_scores(q, nu));
    }
};

// bi-implication with a minimal-colour memory. The x1 side is arranged to
// parity 0 with d = 1 (Buchi, or weak aligned to 0); x2 is the memory side.
class ParityIffAut final : public CompositeAut {
public:
    ParityIffAut(AutPtr a, AutPtr b, int x1_idx) : i1_(x1_idx) {
        ch.push_back(std::move(a));
        ch.push_back(std::move(b));
        assert(ch[i1_]->p == 0 && ch[i1_]->d == 1);
        x1_weak_ = ch[i1_]->weak;
        d2_ = ch[1 - i1_]->d;
        d = d2_ + 1;
        p = ch[1 - i1_]->p;  // (p1 + p2) mod 2 with p1 = 0
    }

    State initial() const override {
        auto init = child_initials();
        State s;
        if (iff_sink(init, s)) return s;
        return State::node(std::move(init), d2_);
    }

    StepOut step(const State& q, Letter nu) const override {
        if (q.is_sink()) return sink_step(q);
        auto s = child_steps(q, nu);
        std::vector<State> succs{s[0].q, s[1].q};
        State sink;
        if (iff_sink(succs, sink)) return {sink, sink.is_bot() ? bad() : good()};
        int c2 = std::min(q.aux(), s[1 - i1_].colour);
        bool acc1 = s[i1_].colour == 0;
        int colour = acc1 ? c2 : s[1 - i1_].colour + 1;
        int mem = (acc1 || x1_weak_) ? d2_ : c2;
        return {State::node(std::move(succs), mem), colour};
    }

    Score score(const State& q, Letter nu) const override {
        StepOut nx = step(q, nu);
        if (nx.q.is_sink()) return sink_score(nx.q);
        auto cs = child_scores(q, nu);
        auto s = child_steps(q, nu);
        int c2 = std::min(q.aux(), s[1 - i1_].colour);
        if (c2 < q.aux()) {
            cs[1 - i1_].w *= 2;
            cs[1 - i1_].s = c2 % 2 == p ? (3 + cs[1 - i1_].s) / 4 : cs[1 - i1_].s / 4;
        }
        return agg_iff(cs);
    }

private:
    int i1_;
    bool x1_weak_;
    int d2_;
};

// ---- builder ----------------------------------------------------------------

namespace {

AutPtr complement(AutPtr a) { return std::make_unique<ComplementAut>(std::move(a)); }

AutPtr to_parity1(AutPtr a) {
    if (a->p == 1) return a;
    return std::make_unique<ColourShiftAut>(std::move(a));
}

AccType dual_type(AccType t) {
    switch (t) {
        case AccType::Buchi: return AccType::CoBuchi;
        case AccType::CoBuchi: return AccType::Buchi;
        default: return t;
    }
}

AutPtr make_conj(std::vector<AutPtr> as, const std::vector<AccType>& ts) {
    if (as.size() > 2) {
        for (AccType t : ts) assert(t == AccType::Buchi);
        return std::make_unique<RoundRobinConj>(std::move(as));
    }
    assert(as.size() == 2);
    for (int i = 0; i < 2; i++)
        if (ts[i] == AccType::Weak)
            return std::make_unique<WeakFilterConj>(std::move(as[0]), std::move(as[1]), i);
    for (int i = 0; i < 2; i++)
        if (ts[i] == AccType::CoBuchi) {
            as[1 - i] = to_parity1(std::move(as[1 - i]));
            return std::make_unique<CoBuchiFilterConj>(std::move(as[0]), std::move(as[1]), i);
        }
    if (ts[0] == AccType::Buchi && ts[1] == AccType::Buchi) {
        std::vector<AutPtr> kids;
        kids.push_back(std::move(as[0]));
        kids.push_back(std::move(as[1]));
        return std::make_unique<RoundRobinConj>(std::move(kids));
    }
    // Buchi with Parity
    int bi = ts[0] == AccType::Buchi ? 0 : 1;
    assert(ts[bi] == AccType::Buchi && ts[1 - bi] == AccType::Parity);
    as[1 - bi] = to_parity1(std::move(as[1 - bi]));
    return std::make_unique<ColourMemoryConj>(std::move(as[0]), std::move(as[1]), bi);
}

AutPtr build_aut(const AnnNode& n, const Alphabet& sigma) {
    switch (n.conn) {
        case AnnNode::Leaf:
            switch (n.type) {
                case AccType::Weak: return std::make_unique<WeakLeafAut>(n.formula, 0);
                case AccType::Buchi: return std::make_unique<BuchiLeafAut>(n.formula.kid(1));
                case AccType::CoBuchi:
                    return complement(std::make_unique<BuchiLeafAut>(simplify(nnf_not(n.formula.kid(1)))));
                case AccType::Parity: throw UnsupportedFragment(n.formula, to_string(n.formula, sigma));
            }
            break;
        case AnnNode::And: {
            std::vector<AutPtr> as;
            std::vector<AccType> ts;
            for (auto& k : n.kids) {
                as.push_back(build_aut(*k, sigma));
                ts.push_back(k->type);
            }
            return make_conj(std::move(as), ts);
        }
        case AnnNode::Or: {
            std::vector<AutPtr> as;
            std::vector<AccType> ts;
            for (auto& k : n.kids) {
                as.push_back(complement(build_aut(*k, sigma)));
                ts.push_back(dual_type(k->type));
            }
            return complement(make_conj(std::move(as), ts));
        }
        case AnnNode::Iff: {
            AutPtr a = build_aut(*n.kids[0], sigma);
            AutPtr b = build_aut(*n.kids[1], sigma);
            AccType ta = n.kids[0]->type, tb = n.kids[1]->type;
            if (ta == AccType::Weak && tb == AccType::Weak) {
                if (a->p != b->p) b = std::make_unique<WeakFlipAut>(std::move(b));
                return std::make_unique<WeakIffAut>(std::move(a), std::move(b));
            }
            // pick the x1 side: weak, else Buchi, else co-Buchi (then
            // complement both sides, which preserves the bi-implication)
            auto pref = [](AccType t) {
                switch (t) {
                    case AccType::Weak: return 0;
                    case AccType::Buchi: return 1;
                    case AccType::CoBuchi: return 2;
                    case AccType::Parity: return 3;
                }
                return 3;
            };
            int i1 = pref(ta) <= pref(tb) ? 0 : 1;
            AccType t1 = i1 == 0 ? ta : tb;
            assert(t1 != AccType::Parity);
            if (t1 == AccType::CoBuchi) {
                a = complement(std::move(a));
                b = complement(std::move(b));
            }
            AutPtr* x1 = i1 == 0 ? &a : &b;
            if ((*x1)->weak && (*x1)->p == 1) *x1 = std::make_unique<WeakFlipAut>(std::move(*x1));
            return std::make_unique<ParityIffAut>(std::move(a), std::move(b), i1);
        }
    }
    throw std::logic_error("build_aut: bad annotation node");
}

}  // namespace
}  // namespace detail

// ---- DpaHandle --------------------------------------------------------------

DpaHandle::DpaHandle(AnnotatedFormula ann, Alphabet sigma)
    : ann_(std::move(ann)), sigma_(std::move(sigma)), root_(detail::build_aut(*ann_, sigma_)) {}

DpaHandle::~DpaHandle() = default;
DpaHandle::DpaHandle(DpaHandle&&) noexcept = default;
DpaHandle& DpaHandle::operator=(DpaHandle&&) noexcept = default;

int DpaHandle::parity() const { return root_->p; }
int DpaHandle::max_colour() const { return root_->d; }
State DpaHandle::initial() const { return root_->initial(); }
StepOut DpaHandle::step(const State& q, Letter nu) const { return root_->step(q, nu); }

Score DpaHandle::score(const State& q, Letter nu) const {
    StepOut s = root_->step(q, nu);
    if (s.q.is_bot()) return {1.0, 0.0};
    if (s.q.is_top()) return {1.0, 1.0};
    Score sc = root_->score(q, nu);
    sc.s = std::min(1.0, std::max(0.0, sc.s));
    if (!(sc.w > 0)) sc.w = 1.0;
    return sc;
}

TransitionGroup DpaHandle::compute_successors(const State& q) const {
    int n_in = sigma_.n_in(), n_out = sigma_.n_out();
    std::uint32_t ni = 1u << n_in, no = 1u << n_out;
    // successor/colour table and small successor ids
    std::vector<State> succ_list;
    auto succ_id = [&](const State& s) -> int {
        for (std::size_t i = 0; i < succ_list.size(); i++)
            if (succ_list[i] == s) return (int)i;
        succ_list.push_back(s);
        return (int)succ_list.size() - 1;
    };
    std::vector<std::vector<std::pair<int, int>>> table(ni);  // [in][out] = (colour, succ)
    for (std::uint32_t i = 0; i < ni; i++) {
        table[i].resize(no);
        for (std::uint32_t o = 0; o < no; o++) {
            Letter nu = i | (o << n_in);
            StepOut s = root_->step(q, nu);
            table[i][o] = {s.colour, succ_id(s.q)};
        }
    }
    // group inputs by their whole output row, in first-occurrence order
    std::vector<std::vector<std::uint32_t>> in_classes;
    std::vector<int> class_of(ni, -1);
    for (std::uint32_t i = 0; i < ni; i++) {
        int found = -1;
        for (std::size_t c = 0; c < in_classes.size() && found < 0; c++)
            if (table[in_classes[c][0]] == table[i]) found = (int)c;
        if (found < 0) {
            in_classes.push_back({i});
        } else {
            in_classes[found].push_back(i);
        }
    }
    TransitionGroup out;
    for (const auto& cls : in_classes) {
        std::vector<char> in_set(ni, 0);
        for (std::uint32_t i : cls) in_set[i] = 1;
        auto ins = cube_cover(in_set, n_in);
        // split the row by (colour, successor), in first-occurrence order
        const auto& row = table[cls[0]];
        std::vector<std::pair<int, int>> keys;
        for (std::uint32_t o = 0; o < no; o++)
            if (std::find(keys.begin(), keys.end(), row[o]) == keys.end()) keys.push_back(row[o]);
        for (const auto& key : keys) {
            std::vector<char> out_set(no, 0);
            int count = 0;
            std::uint32_t first_o = 0;
            bool have_first = false;
            for (std::uint32_t o = 0; o < no; o++)
                if (row[o] == key) {
                    out_set[o] = 1;
                    count++;
                    if (!have_first) { first_o = o; have_first = true; }
                }
            Cell cell;
            cell.ins = ins;
            cell.outs = cube_cover(out_set, n_out);
            cell.colour = key.first;
            cell.succ = succ_list[key.second];
            cell.rep = cls[0] | (first_o << n_in);
            cell.n_outputs = count;
            out.push_back(std::move(cell));
        }
    }
    return out;
}

const TransitionGroup& DpaHandle::successors(const State& q) {
    if (memo_on_) {
        auto it = memo_.find(q);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(q, compute_successors(q)).first->second;
    }
    scratch_ = compute_successors(q);
    return scratch_;
}

std::string DpaHandle::dump(int max_states) {
    std::ostringstream os;
    os << "dpa parity=" << parity() << " max_colour=" << max_colour() << "\n";
    std::vector<State> order{initial()};
    std::unordered_set<State, StateHash> seen{initial()};
    for (std::size_t i = 0; i < order.size() && (int)order.size() <= max_states; i++) {
        State q = order[i];
        os << "state " << i << " " << to_string(q, sigma_) << "\n";
        std::vector<std::string> in_names, out_names;
        for (int k = 0; k < sigma_.n_in(); k++) in_names.push_back(sigma_.name(k));
        for (int k = 0; k < sigma_.n_out(); k++) out_names.push_back(sigma_.name(sigma_.n_in() + k));
        for (const Cell& c : successors(q)) {
            os << "  [";
            for (std::size_t j = 0; j < c.ins.size(); j++)
                os << (j ? " | " : "") << cube_to_string(c.ins[j], in_names);
            os << "] / [";
            for (std::size_t j = 0; j < c.outs.size(); j++)
                os << (j ? " | " : "") << cube_to_string(c.outs[j], out_names);
            os << "] colour " << c.colour << " -> " << to_string(c.succ, sigma_) << "\n";
            if (seen.insert(c.succ).second && !c.succ.is_sink()) order.push_back(c.succ);
        }
    }
    return os.str();
}

}  // namespace pgsynth
