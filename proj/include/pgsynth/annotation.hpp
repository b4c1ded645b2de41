#ifndef PGSYNTH_ANNOTATION_HPP
#define PGSYNTH_ANNOTATION_HPP

#include <memory>
#include <stdexcept>
#include <vector>

#include "pgsynth/formula.hpp"

namespace pgsynth {

// Acceptance types with the partial order W < B, W < C, B < P, C < P.
enum class AccType : std::uint8_t { Weak, Buchi, CoBuchi, Parity };

// least upper bound
AccType join(AccType a, AccType b);

const char* acc_name(AccType t);

// tau: the acceptance type of a formula
AccType classify(Formula f);

struct UnsupportedFragment : std::runtime_error {
    Formula leaf;
    explicit UnsupportedFragment(Formula f, const std::string& text)
        : std::runtime_error("unsupported fragment: general parity leaf " + text), leaf(f) {}
};

// Annotated syntax tree. Leaves hold a formula in muLTL/nuLTL (Weak),
// G(muLTL) (Buchi) or F(nuLTL) (CoBuchi); Parity leaves are kept in the tree
// and rejected by the automaton builder. Runs of >= 2 Buchi conjuncts
// (CoBuchi disjuncts) are grouped into one n-ary node; everything else is
// binary.
struct AnnNode {
    enum Conn : std::uint8_t { Leaf, And, Or, Iff };

    AccType type;
    Conn conn;
    Formula formula;  // the whole subformula this node denotes
    std::vector<std::unique_ptr<AnnNode>> kids;
};

using AnnotatedFormula = std::unique_ptr<AnnNode>;

AnnotatedFormula annotate(Formula f);

}  // namespace pgsynth

#endif
