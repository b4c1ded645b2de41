#include "pgsynth/annotation.hpp"

#include <algorithm>

namespace pgsynth {

AccType join(AccType a, AccType b) {
    if (a == b) return a;
    if (a == AccType::Weak) return b;
    if (b == AccType::Weak) return a;
    return AccType::Parity;  // {B,C}, {B,P}, {C,P}
}

const char* acc_name(AccType t) {
    switch (t) {
        case AccType::Weak: return "W";
        case AccType::Buchi: return "B";
        case AccType::CoBuchi: return "C";
        case AccType::Parity: return "P";
    }
    return "?";
}

AccType classify(Formula f) {
    if (in_mu(f) || in_nu(f)) return AccType::Weak;
    if (f.is_G() && in_mu(f.kid(1))) return AccType::Buchi;
    if (f.is_F() && in_nu(f.kid(1))) return AccType::CoBuchi;
    switch (f.kind()) {
        case Kind::And:
        case Kind::Or: {
            AccType t = AccType::Weak;
            for (Formula k : f.kids()) t = join(t, classify(k));
            return t;
        }
        case Kind::Iff: {
            AccType a = classify(f.kid(0)), b = classify(f.kid(1));
            if (a == AccType::Weak && b == AccType::Weak) return AccType::Weak;
            return AccType::Parity;
        }
        default: return AccType::Parity;
    }
}

namespace {

AnnotatedFormula leaf(AccType t, Formula f) {
    auto n = std::make_unique<AnnNode>();
    n->type = t;
    n->conn = AnnNode::Leaf;
    n->formula = f;
    return n;
}

AnnotatedFormula node(AccType t, AnnNode::Conn c, Formula f, std::vector<AnnotatedFormula> kids) {
    auto n = std::make_unique<AnnNode>();
    n->type = t;
    n->conn = c;
    n->formula = f;
    n->kids = std::move(kids);
    return n;
}

AnnotatedFormula build(Formula f);

// Binary composite with the {P,P} side condition: two Parity children cannot
// be combined, so the whole subformula degrades to a Parity leaf.
AnnotatedFormula combine(AnnNode::Conn c, Formula f, AnnotatedFormula a, AnnotatedFormula b) {
    if (a->type == AccType::Parity && b->type == AccType::Parity) return leaf(AccType::Parity, f);
    AccType t = c == AnnNode::Iff
                    ? (a->type == AccType::Weak && b->type == AccType::Weak ? AccType::Weak : AccType::Parity)
                    : join(a->type, b->type);
    std::vector<AnnotatedFormula> kids;
    kids.push_back(std::move(a));
    kids.push_back(std::move(b));
    return node(t, c, f, std::move(kids));
}

// n-ary conjunction (c = And, group = Buchi) or disjunction (Or, CoBuchi):
// annotate the flattened operand list, fuse a run of >= 2 group-typed
// children into one n-ary node placed at the first one's position, then fold
// the remainder right to left.
AnnotatedFormula build_nary(AnnNode::Conn c, AccType group, Formula f) {
    std::vector<Formula> ops(f.kids().begin(), f.kids().end());
    std::vector<AnnotatedFormula> kids;
    kids.reserve(ops.size());
    for (Formula o : ops) kids.push_back(build(o));

    std::vector<AnnotatedFormula> seq;
    std::vector<AnnotatedFormula> grouped;
    for (auto& k : kids) {
        if (k->type == group) grouped.push_back(std::move(k));
        else seq.push_back(std::move(k));
    }
    if (grouped.size() == 1) {
        seq.push_back(std::move(grouped[0]));
        grouped.clear();
    }
    if (!grouped.empty()) {
        std::vector<Formula> gf;
        for (auto& g : grouped) gf.push_back(g->formula);
        Formula gform = gf.size() == 1 ? gf[0] : Formula::make(c == AnnNode::And ? Kind::And : Kind::Or, gf);
        seq.push_back(node(group, c, gform, std::move(grouped)));
    }
    AnnotatedFormula acc = std::move(seq.back());
    for (int i = (int)seq.size() - 2; i >= 0; i--) {
        Formula sub = acc->formula;
        Formula joint = simplify(Formula::make(c == AnnNode::And ? Kind::And : Kind::Or, {seq[i]->formula, sub}));
        acc = combine(c, i == 0 ? f : joint, std::move(seq[i]), std::move(acc));
    }
    return acc;
}

AnnotatedFormula build(Formula f) {
    if (in_mu(f) || in_nu(f)) return leaf(AccType::Weak, f);
    if (f.is_G() && in_mu(f.kid(1))) return leaf(AccType::Buchi, f);
    if (f.is_F() && in_nu(f.kid(1))) return leaf(AccType::CoBuchi, f);
    switch (f.kind()) {
        case Kind::And: return build_nary(AnnNode::And, AccType::Buchi, f);
        case Kind::Or: return build_nary(AnnNode::Or, AccType::CoBuchi, f);
        case Kind::Iff: return combine(AnnNode::Iff, f, build(f.kid(0)), build(f.kid(1)));
        default: return leaf(AccType::Parity, f);
    }
}

}  // namespace

AnnotatedFormula annotate(Formula f) { return build(simplify(f)); }

}  // namespace pgsynth
