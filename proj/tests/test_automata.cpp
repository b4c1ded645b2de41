#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pgsynth/automata.hpp"
#include "pgsynth/parser.hpp"
#include "support/oracle.hpp"

using namespace pgsynth;
using namespace pgsynth::testing;

namespace {

DpaHandle build(const std::string& ltl, const Alphabet& ab) {
    return DpaHandle(annotate(parse(ltl, ab)), ab);
}

const Alphabet arb2({"r1", "r2"}, {"g1", "g2"});
const std::string arb2_ltl = arbiter_ltl(2);

// letter helpers for the 2-client arbiter alphabet
constexpr Letter R1 = 1, R2 = 2, G1 = 4, G2 = 8;

}  // namespace

TEST_CASE("acceptance type classification") {
    Alphabet ab({"a"}, {"b", "c"});
    auto t = [&](const std::string& s) { return classify(parse(s, ab)); };
    CHECK(t("a U (b & X c)") == AccType::Weak);
    CHECK(t("a R b") == AccType::Weak);
    CHECK(t("G F a") == AccType::Buchi);
    CHECK(t("F G a") == AccType::CoBuchi);
    CHECK(t("G F a & G F b") == AccType::Buchi);
    CHECK(t("F G a | F G b") == AccType::CoBuchi);
    CHECK(t("G F a & F G b") == AccType::Parity);
    CHECK(t("(G F a) <-> (G F b)") == AccType::Parity);
    CHECK(t("(G a) <-> (G b)") == AccType::Weak);
    CHECK(t("G(a U G b)") == AccType::Parity);
}

TEST_CASE("parity leaves are rejected by the builder") {
    Alphabet ab({"a"}, {"b"});
    Formula f = parse("F G F a", ab);
    CHECK_THROWS_AS(DpaHandle(annotate(f), ab), UnsupportedFragment);
    CHECK_THROWS_AS(DpaHandle(annotate(parse("G(a U G b)", ab)), ab), UnsupportedFragment);
}

TEST_CASE("mutex safety automaton") {
    DpaHandle h = build("G !(g1 & g2)", arb2);
    CHECK(accepts_lasso(h, {{}, {0}}));
    CHECK(accepts_lasso(h, {{}, {G1, G2}}));
    CHECK(!accepts_lasso(h, {{G1 | G2}, {0}}));  // one violation falls into the sink
    // the safety automaton never leaves the sink again
    State q = h.step(h.initial(), G1 | G2).q;
    CHECK(q.is_bot());
    CHECK(h.step(q, 0).q.is_bot());
}

TEST_CASE("arbiter automaton accepts exactly the fair grant patterns") {
    DpaHandle h = build(arb2_ltl, arb2);
    CHECK(accepts_lasso(h, {{}, {0}}));                    // no requests
    CHECK(accepts_lasso(h, {{}, {R1 | G1, R2 | G2}}));     // alternating service
    CHECK(accepts_lasso(h, {{R1 | R2}, {G1, G2}}));
    CHECK(!accepts_lasso(h, {{R1}, {0}}));                 // request never granted
    CHECK(!accepts_lasso(h, {{}, {R1 | R2 | G1, G1}}));    // client 2 starves
    CHECK(!accepts_lasso(h, {{G1 | G2}, {0}}));            // mutex violation
}

TEST_CASE("breakpoint automaton for a conjunction of obligations") {
    Alphabet ab({"a"}, {"b"});
    DpaHandle h = build("G F a & G F b", ab);
    CHECK(h.parity() == 0);
    CHECK(accepts_lasso(h, {{}, {3}}));
    CHECK(accepts_lasso(h, {{}, {1, 2}}));
    CHECK(!accepts_lasso(h, {{}, {1}}));
    CHECK(!accepts_lasso(h, {{3}, {0}}));
    // the pair construction discharges both obligations within two steps of 'ab'
    State q = h.initial();
    int good = 0;
    for (int i = 0; i < 6; i++) {
        StepOut s = h.step(q, 3);
        good += s.colour == 0;
        q = s.q;
    }
    CHECK(good >= 2);
}

TEST_CASE("complement flips the language") {
    Alphabet ab({"a"}, {"b"});
    DpaHandle h = build("F G a", ab);     // complemented Buchi inside
    DpaHandle hn = build("G F !a", ab);   // the complement language
    Rng rng(5);
    for (int i = 0; i < 200; i++) {
        LassoWord w = random_lasso(rng, 2, 4);
        CHECK(accepts_lasso(h, w) != accepts_lasso(hn, w));
    }
}

TEST_CASE("language agrees with brute-force lasso semantics (mini fuzz)") {
    Rng rng(17);
    Alphabet ab({"a", "b"}, {"c"});
    for (int i = 0; i < 120; i++) {
        Formula f = random_supported(rng, 3, 4);
        DpaHandle h(annotate(f), ab);
        for (int k = 0; k < 48; k++) {
            LassoWord w = random_lasso(rng, 3, 4);
            CAPTURE(to_string(f, ab));
            REQUIRE(accepts_lasso(h, w) == lasso_sat(f, w));
        }
    }
}

TEST_CASE("successors partition the letter space and match step") {
    Rng rng(29);
    Alphabet ab({"a", "b"}, {"c"});
    for (int i = 0; i < 40; i++) {
        Formula f = random_supported(rng, 3, 4);
        DpaHandle h(annotate(f), ab);
        const TransitionGroup& tg = h.successors(h.initial());
        std::vector<int> hits(8, 0);
        for (const Cell& cell : tg) {
            for (Letter nu = 0; nu < 8; nu++) {
                bool in_cell = false;
                for (const Cube& ci : cell.ins)
                    for (const Cube& co : cell.outs)
                        in_cell |= ci.contains(nu & 3) && co.contains(nu >> 2);
                if (!in_cell) continue;
                hits[nu]++;
                StepOut s = h.step(h.initial(), nu);
                CHECK(s.q == cell.succ);
                CHECK(s.colour == cell.colour);
            }
            CHECK(cell.succ == h.step(h.initial(), cell.rep).q);
        }
        for (int nu = 0; nu < 8; nu++) CHECK(hits[nu] == 1);
    }
}

TEST_CASE("memoized successors are stable") {
    DpaHandle h = build(arb2_ltl, arb2);
    const TransitionGroup& a = h.successors(h.initial());
    std::size_t n = a.size();
    const TransitionGroup& b = h.successors(h.initial());
    CHECK(&a == &b);
    CHECK(b.size() == n);
}

TEST_CASE("scores are bounded and sink-anchored") {
    Rng rng(41);
    Alphabet ab({"a", "b"}, {"c"});
    for (int i = 0; i < 60; i++) {
        Formula f = random_supported(rng, 3, 4);
        DpaHandle h(annotate(f), ab);
        for (Letter nu = 0; nu < 8; nu++) {
            Score sc = h.score(h.initial(), nu);
            CHECK(sc.w > 0);
            CHECK(sc.s >= 0.0);
            CHECK(sc.s <= 1.0);
            State q = h.step(h.initial(), nu).q;
            if (q.is_bot()) CHECK(sc.s == 0.0);
            if (q.is_top()) CHECK(sc.s == 1.0);
        }
    }
}

TEST_CASE("dump lists the reachable states") {
    DpaHandle h = build("G !(g1 & g2)", arb2);
    std::string d = h.dump();
    CHECK(d.find("parity") != std::string::npos);
    CHECK(d.find("BOT") != std::string::npos);
}
