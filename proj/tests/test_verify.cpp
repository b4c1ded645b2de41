#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pgsynth/engine.hpp"
#include "pgsynth/parser.hpp"
#include "pgsynth/verify.hpp"
#include "support/oracle.hpp"

using namespace pgsynth;
using namespace pgsynth::testing;

namespace {

const Alphabet arb2({"r1", "r2"}, {"g1", "g2"});
constexpr Letter G1 = 4, G2 = 8;

DpaHandle build(const std::string& ltl, const Alphabet& ab) {
    return DpaHandle(annotate(parse(ltl, ab)), ab);
}

MealyMachine arbiter_machine(SynthesisOutcome& out) {
    out = synthesize(parse(arbiter_ltl(2), arb2), arb2);
    REQUIRE(out.realizable);
    return extract_mealy(*out.arena, *out.dpa, out.strategy, out.won);
}

}  // namespace

TEST_CASE("lasso membership on the mutex automaton") {
    DpaHandle h = build("G !(g1 & g2)", arb2);
    CHECK(accepts_lasso(h, {{}, {0}}));
    CHECK(!accepts_lasso(h, {{G1 | G2}, {0}}));
    CHECK_THROWS(accepts_lasso(h, {{0}, {}}));  // empty loop
}

TEST_CASE("lasso membership handles loops longer than the period") {
    Alphabet ab({"a"}, {"b"});
    DpaHandle h = build("G F a", ab);
    CHECK(accepts_lasso(h, {{}, {1, 0, 0}}));
    CHECK(!accepts_lasso(h, {{1, 1, 1}, {0}}));
    CHECK(accepts_lasso(h, {{0, 0, 0, 0}, {0, 1}}));
}

TEST_CASE("verifier accepts the synthesized arbiter") {
    SynthesisOutcome out;
    MealyMachine m = arbiter_machine(out);
    CHECK(verify_controller(m, *out.dpa));
    bool warned = false;
    CHECK(verify_controller(m, *out.dpa, VerifyMode::AllCompletions, &warned));
    CHECK(!warned);  // only one unspecified bit per transition here
}

TEST_CASE("verifier rejects a machine that violates mutex") {
    SynthesisOutcome out;
    MealyMachine m = arbiter_machine(out);
    for (auto& row : m.rows)
        for (auto& o : row.out) o = Cube{3, 3};  // always grant both
    CHECK(!verify_controller(m, *out.dpa));
}

TEST_CASE("verifier rejects a starving machine") {
    SynthesisOutcome out;
    MealyMachine m = arbiter_machine(out);
    for (auto& row : m.rows)
        for (auto& o : row.out) o = Cube{3, 0};  // never grant anything
    CHECK(!verify_controller(m, *out.dpa));
}

TEST_CASE("verifier on a trivial specification") {
    Alphabet ab({"r1"}, {"g1"});
    DpaHandle h = build("G tt", ab);
    MealyMachine m;
    m.sigma = ab;
    m.rows.resize(1);
    m.rows[0].succ = {0, 0};
    m.rows[0].out = {Cube{0, 0}, Cube{0, 0}};
    CHECK(verify_controller(m, h));
}

TEST_CASE("verifier checks the alphabet") {
    SynthesisOutcome out;
    MealyMachine m = arbiter_machine(out);
    DpaHandle other = build("G tt", Alphabet({"r1"}, {"g1"}));
    CHECK_THROWS(verify_controller(m, other));
}

TEST_CASE("machine traces are accepted words") {
    SynthesisOutcome out;
    MealyMachine m = arbiter_machine(out);
    Rng rng(67);
    for (int t = 0; t < 200; t++) {
        // drive the machine with an eventually periodic input sequence and
        // read off the produced i/o word; unspecified outputs completed as 0
        int pre = (int)(rng() % 5u), loop = 1 + (int)(rng() % 4u);
        std::vector<Letter> loop_in(loop);
        for (Letter& in : loop_in) in = rng() % 4;
        int s = m.init;
        std::vector<Letter> word;
        std::vector<int> states;
        int n = pre + loop * (m.n_states() + 2);
        for (int i = 0; i < n; i++) {
            Letter in = i < pre ? rng() % 4 : loop_in[(i - pre) % loop];
            const Cube& o = m.rows[s].out[in];
            states.push_back(s);
            word.push_back(in | ((o.value & o.mask) << 2));
            s = m.rows[s].succ[in];
        }
        // the deterministic machine must repeat a (state, phase) pair
        int start = -1, end = -1;
        for (int i = pre; i < n && start < 0; i++)
            for (int j = i + loop; j < n; j += loop)
                if (states[i] == states[j]) {
                    start = i;
                    end = j;
                    break;
                }
        REQUIRE(start >= 0);
        LassoWord w;
        w.prefix.assign(word.begin(), word.begin() + start);
        w.loop.assign(word.begin() + start, word.begin() + end);
        CHECK(accepts_lasso(*out.dpa, w));
    }
}

TEST_CASE("quality metric") {
    CHECK(quality(7, 7) == doctest::Approx(2.0));
    CHECK(quality(9, 0) == doctest::Approx(1.0));
    CHECK(quality(99, 0) == doctest::Approx(0.0));
    CHECK(quality(1000, 0) == 0.0);  // clamped
    // monotone: worse (bigger) solutions score less
    CHECK(quality(10, 5) > quality(20, 5));
    CHECK(quality(10, 5) < quality(10, 8));
}
