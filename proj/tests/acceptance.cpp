// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Kept as a plain binary so the output reads as a checklist.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "pgsynth/aiger.hpp"
#include "pgsynth/engine.hpp"
#include "pgsynth/parser.hpp"
#include "pgsynth/verify.hpp"
#include "pgsynth/zielonka.hpp"
#include "support/oracle.hpp"

using namespace pgsynth;
using namespace pgsynth::testing;

namespace {

int failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", n, what, ok ? "pass" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) failures++;
}

std::vector<std::string> names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

struct Run {
    Alphabet ab;
    SynthesisOutcome out;
    explicit Run(const Spec& s, EngineOptions opts = {})
        : ab(names(s.ins), names(s.outs)),
          out(synthesize(parse(s.ltl, ab), ab, opts)) {}
    MealyMachine mealy() {
        return extract_mealy(*out.arena, *out.dpa, out.strategy, out.won);
    }
};

// ---- 1: golden arbiter -----------------------------------------------------

void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    Run r(corpus()[0]);
    bool ok = r.out.realizable;
    std::string why;
    MealyMachine m = r.mealy();
    if (m.n_states() != 3) {
        ok = false;
        why = "expected 3 states, got " + std::to_string(m.n_states());
    }
    // no-request row: exactly one grant constrained (low), the other free
    const Cube& idle = m.rows[0].out[0];
    if (idle.literals() != 1 || (idle.value & idle.mask) != 0) {
        ok = false;
        why = "idle output not a single negative literal";
    }
    if (!verify_controller(m, *r.out.dpa, VerifyMode::AllCompletions)) {
        ok = false;
        why = "verifier rejected the controller";
    }
    auto sorted = [](std::vector<std::uint32_t> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    StateEncoding u = encode(m, EncodingMode::Unstructured);
    if (u.bits != 2 || sorted(u.code) != std::vector<std::uint32_t>{0b00, 0b01, 0b10}) {
        ok = false;
        why = "unstructured codes off";
    }
    StateEncoding st = encode(m, EncodingMode::Structured);
    if (st.bits != 4 ||
        sorted(st.code) != std::vector<std::uint32_t>{0b0000, 0b0011, 0b0100}) {
        ok = false;
        why = "structured codes off";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 1.0) {
        ok = false;
        why = "took " + std::to_string(secs) + "s";
    }
    report(1, "golden arbiter", ok, why);
}

// ---- 2: language oracle ----------------------------------------------------

void criterion2() {
    Rng rng(2024);
    Alphabet ab({"a", "b"}, {"c"});
    long checked = 0, wrong = 0;
    std::string first;
    for (int i = 0; i < 500; i++) {
        Formula f = random_supported(rng, 3, 5);
        DpaHandle h(annotate(f), ab);
        for (int k = 0; k < 256; k++) {
            LassoWord w = random_lasso(rng, 3, 4);
            checked++;
            if (accepts_lasso(h, w) != lasso_sat(f, w)) {
                wrong++;
                if (first.empty()) first = to_string(f, ab);
            }
        }
    }
    report(2, "language oracle", wrong == 0,
           wrong ? std::to_string(wrong) + "/" + std::to_string(checked) +
                       " mismatches, e.g. " + first
                 : std::to_string(checked) + " lasso checks");
}

// ---- 3: solver equivalence -------------------------------------------------

void criterion3() {
    Rng rng(3);
    int bad = 0;
    for (int i = 0; i < 200; i++) {
        SolveGame g = random_game(rng, 50, 4);
        if (solve(g, all_give_up(g)).won != solve_zielonka(g)) bad++;
    }
    report(3, "solver equivalence", bad == 0,
           bad ? std::to_string(bad) + "/200 games disagree" : "200 games");
}

// ---- 4: strategy-iteration progress ---------------------------------------
//
// The progress property is enforced inside solve() and throws on violation;
// exercising a large random batch plus the whole corpus makes the absence of
// throws the assertion.

void criterion4() {
    bool ok = true;
    std::string why;
    try {
        Rng rng(4);
        for (int i = 0; i < 150; i++) {
            SolveGame g = random_game(rng, 50, 4);
            solve(g, all_give_up(g));
        }
        for (const Spec& s : corpus()) Run r(s);
    } catch (const std::logic_error& e) {
        ok = false;
        why = e.what();
    }
    report(4, "iteration progress", ok, why);
}

// ---- 5: under-approximation monotonicity ----------------------------------

void criterion5() {
    Rng rng(5);
    int bad = 0;
    for (int game_i = 0; game_i < 50; game_i++) {
        SolveGame full = random_game(rng, 30, 4);
        int n = (int)full.nodes.size();
        std::vector<int> order(n);
        for (int i = 0; i < n; i++) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        auto won_full = solve(full, all_give_up(full)).won;
        for (int k = 1; k < n; k++) {
            SolveGame part = full;
            for (int j = k; j < n; j++) {
                part.nodes[order[j]].term = SolveGame::Zero;  // unexplored boundary
                part.nodes[order[j]].edges.clear();
            }
            auto won = solve(part, all_give_up(part)).won;
            for (int v = 0; v < n; v++)
                if (won[v] && !won_full[v]) bad++;
        }
    }
    report(5, "under-approximation monotonicity", bad == 0,
           bad ? std::to_string(bad) + " nodes lost ground" : "50 games, all prefixes");
}

// ---- 6: exploration verdict invariance ------------------------------------

void criterion6() {
    int bad = 0;
    std::string first;
    for (const Spec& s : corpus()) {
        bool verdicts[4];
        int i = 0;
        for (Exploration e : {Exploration::Bfs, Exploration::BfsPlus, Exploration::Pq,
                              Exploration::PqPlus}) {
            EngineOptions o;
            o.exploration = e;
            verdicts[i++] = Run(s, o).out.realizable;
        }
        for (int k = 1; k < 4; k++)
            if (verdicts[k] != verdicts[0]) {
                bad++;
                if (first.empty()) first = s.name;
                break;
            }
    }
    report(6, "exploration verdict invariance", bad == 0,
           bad ? std::to_string(bad) + " specs disagree, e.g. " + first
               : std::to_string(corpus().size()) + " specs x 4 strategies");
}

// ---- 7: quality metric ----------------------------------------------------

void criterion7() {
    bool ok = std::abs(quality(7, 7) - 2.0) < 1e-12 &&
              std::abs(quality(9, 0) - 1.0) < 1e-12 && quality(99, 0) == 0.0 &&
              quality(990, 0) == 0.0 && std::abs(quality(19, 1) - 1.0) < 1e-12;
    report(7, "quality metric", ok);
}

// ---- 8: circuit fidelity ---------------------------------------------------

// walk every reachable (machine state, latch state) pair; checking all inputs
// per pair subsumes all finite input words, length 6 included
bool circuit_matches(const MealyMachine& m, const StateEncoding& e, const Circuit& c) {
    int ni = m.sigma.n_in();
    std::vector<char> seen(m.n_states(), 0);
    std::vector<int> work{m.init};
    seen[m.init] = 1;
    while (!work.empty()) {
        int s = work.back();
        work.pop_back();
        for (std::uint32_t i = 0; i < (1u << ni); i++) {
            std::uint32_t latch = e.code[s];
            std::uint32_t o = c.step(latch, i);
            const Cube& want = m.rows[s].out[i];
            int succ = m.rows[s].succ[i];
            if ((o & want.mask) != want.value) return false;
            if (latch != e.code[succ]) return false;
            if (!seen[succ]) {
                seen[succ] = 1;
                work.push_back(succ);
            }
        }
    }
    return true;
}

void criterion8() {
    int bad = 0;
    std::string first;
    for (const Spec& s : corpus()) {
        if (s.realizable != 1) continue;
        Run r(s);
        if (r.ab.n_in() > 3) continue;
        MealyMachine raw = r.mealy();
        MealyMachine red = reduce_mealy(raw);
        struct Combo {
            const MealyMachine& m;
            EncodingMode mode;
        } combos[] = {{raw, EncodingMode::Unstructured},
                      {raw, EncodingMode::Structured},
                      {red, EncodingMode::Unstructured}};
        for (const Combo& cb : combos) {
            if (cb.mode == EncodingMode::Structured && !cb.m.shaped()) continue;
            StateEncoding e = encode(cb.m, cb.mode);
            Circuit c = to_circuit(cb.m, e);
            std::string text = write_aiger(c);
            bool ok = true;
            try {
                Circuit back = parse_aiger(text);
                ok = write_aiger(back) == text;
            } catch (const AigerError&) {
                ok = false;
            }
            ok = ok && circuit_matches(cb.m, e, c);
            if (!ok) {
                bad++;
                if (first.empty()) first = s.name;
            }
        }
    }
    report(8, "circuit fidelity", bad == 0,
           bad ? std::to_string(bad) + " combos off, e.g. " + first : "");
}

// ---- 9: portfolio dominance ------------------------------------------------

void criterion9() {
    int bad = 0;
    std::string first;
    for (const Spec& s : corpus()) {
        if (s.realizable != 1) continue;
        Run r(s);
        MealyMachine raw = r.mealy();
        MealyMachine red = reduce_mealy(raw);
        int best = portfolio_circuit(raw).circuit.size();
        int a = to_circuit(red, encode(red, EncodingMode::Unstructured)).size();
        int b = to_circuit(raw, encode(raw, EncodingMode::Unstructured)).size();
        int c = raw.shaped()
                    ? to_circuit(raw, encode(raw, EncodingMode::Structured)).size()
                    : b;
        if (best > std::min({a, b, c})) {
            bad++;
            if (first.empty()) first = s.name;
        }
    }
    report(9, "portfolio dominance", bad == 0, bad ? "e.g. " + first : "");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures) std::printf("%d criteria FAILED\n", failures);
    return failures ? 1 : 0;
}
