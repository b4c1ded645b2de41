// Interned LTL formula DAG. Structurally identical formulas share a node,
// so equality is a pointer compare. Negation normal form everywhere: there is
// no Not node, literals carry a polarity. F/G are stored desugared as
// tt U phi / ff R phi; the printer re-sugars them.
#ifndef PGSYNTH_FORMULA_HPP
#define PGSYNTH_FORMULA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pgsynth {

enum class Kind : std::uint8_t { TT, FF, Lit, And, Or, Iff, X, U, R };

class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<std::string> ins, std::vector<std::string> outs);

    int n_in() const { return n_in_; }
    int n_out() const { return (int)names_.size() - n_in_; }
    int size() const { return (int)names_.size(); }
    const std::string& name(int ap) const { return names_[ap]; }
    bool is_input(int ap) const { return ap < n_in_; }
    // -1 when unknown
    int index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;  // inputs first, then outputs
    int n_in_ = 0;
};

// A letter is a bit-vector over Ap: bit i set iff proposition i holds.
using Letter = std::uint32_t;
inline constexpr int kMaxProps = 24;

class Formula {
public:
    struct Node {
        Kind kind;
        bool neg;              // literal polarity
        int ap;                // literal proposition id
        std::vector<Formula> kids;
        std::size_t hash;
    };

    Formula() : n_(nullptr) {}

    static Formula tt();
    static Formula ff();
    static Formula lit(int ap, bool negated = false);
    static Formula make(Kind k, std::vector<Formula> kids);

    static Formula conj(std::vector<Formula> kids) { return make(Kind::And, std::move(kids)); }
    static Formula disj(std::vector<Formula> kids) { return make(Kind::Or, std::move(kids)); }
    static Formula iff(Formula a, Formula b) { return make(Kind::Iff, {a, b}); }
    static Formula next(Formula a) { return make(Kind::X, {a}); }
    static Formula until(Formula a, Formula b) { return make(Kind::U, {a, b}); }
    static Formula release(Formula a, Formula b) { return make(Kind::R, {a, b}); }
    static Formula eventually(Formula a) { return until(tt(), a); }
    static Formula always(Formula a) { return release(ff(), a); }

    Kind kind() const { return n_->kind; }
    bool negated() const { return n_->neg; }
    int ap() const { return n_->ap; }
    std::span<const Formula> kids() const { return n_->kids; }
    Formula kid(int i) const { return n_->kids[i]; }
    std::size_t hash() const { return n_->hash; }
    bool valid() const { return n_ != nullptr; }

    bool is(Kind k) const { return n_->kind == k; }
    bool is_tt() const { return is(Kind::TT); }
    bool is_ff() const { return is(Kind::FF); }
    // sugar recognisers
    bool is_F() const { return is(Kind::U) && kid(0).is_tt(); }
    bool is_G() const { return is(Kind::R) && kid(0).is_ff(); }

    bool operator==(const Formula& o) const { return n_ == o.n_; }
    bool operator!=(const Formula& o) const { return n_ != o.n_; }

    // deterministic structural order, independent of interning order
    static int compare(Formula a, Formula b);

private:
    const Node* n_;
    explicit Formula(const Node* n) : n_(n) {}
    friend struct FormulaInterner;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Negation in NNF: flips literals, dualises And/Or and U/R, and rewrites
// not (a iff b) as a iff not b. Pure syntax, no simplification.
Formula nnf_not(Formula f);

// Propositional canonicaliser: constant folding, flattening, sorted
// deduplicated children, absorption, complementary-literal cancellation and
// the safe temporal constant folds. Idempotent and deterministic.
Formula simplify(Formula f);

// As simplify, but additionally collapses formulas that are propositional
// tautologies / contradictions over their maximal temporal subformulas
// (truth-table check, bails above 20 variables).
Formula simplify_exact(Formula f);

// Blake canonical form of the Boolean skeleton: disjunction of all prime
// implicants over propositions and maximal temporal subformulas (up to 10
// variables; beyond that falls back to simplify). Equivalent skeletons over
// the same variables yield the identical formula, which keeps derivative
// state spaces finite. Memoized.
Formula canon(Formula f);

// Formula derivative: the "after" function. phi must not contain Iff.
// Result is passed through simplify.
Formula af(Formula phi, Letter nu);

// fragment tests: muLTL = no R and no Iff, nuLTL = no U and no Iff
bool in_mu(Formula f);
bool in_nu(Formula f);

std::string to_string(Formula f, const Alphabet& sigma);

}  // namespace pgsynth

#endif
