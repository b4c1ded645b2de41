#include "pgsynth/circuit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pgsynth/aiger.hpp"
#include "pgsynth/bdd.hpp"

namespace pgsynth {

std::uint32_t Circuit::step(std::uint32_t& state, std::uint32_t inputs) const {
    std::vector<char> val(n_vars() + 1, 0);
    for (int i = 0; i < n_inputs; i++) val[1 + i] = inputs >> i & 1;
    for (int l = 0; l < n_latches; l++) val[1 + n_inputs + l] = state >> l & 1;
    auto lit = [&](int v) { return (val[v >> 1] ^ (v & 1)) != 0; };
    for (std::size_t g = 0; g < gates.size(); g++)
        val[1 + n_inputs + n_latches + g] = lit(gates[g].rhs0) && lit(gates[g].rhs1);
    std::uint32_t ns = 0, out = 0;
    for (int l = 0; l < n_latches; l++)
        if (lit(next[l])) ns |= 1u << l;
    for (std::size_t o = 0; o < outs.size(); o++)
        if (lit(outs[o])) out |= 1u << o;
    state = ns;
    return out;
}

namespace {

// BDD -> AIG with structural hashing; returns a literal
struct Lowerer {
    const Bdd& bdd;
    Circuit& c;
    std::map<int, int> memo;                       // bdd ref -> literal
    std::map<std::pair<int, int>, int> and_memo;   // gate cache

    int band(int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == 0) return 0;
        if (a == 1) return b;
        if (a == b) return a;
        if ((a ^ b) == 1) return 0;
        auto it = and_memo.find({a, b});
        if (it != and_memo.end()) return it->second;
        c.gates.push_back({a, b});
        int lit = 2 * (c.n_inputs + c.n_latches + (int)c.gates.size());
        and_memo.emplace(std::pair(a, b), lit);
        return lit;
    }
    int bor(int a, int b) { return band(a ^ 1, b ^ 1) ^ 1; }

    int lower(Bdd::Ref f) {
        if (f == Bdd::zero()) return 0;
        if (f == Bdd::one()) return 1;
        auto it = memo.find(f);
        if (it != memo.end()) return it->second;
        int v = 2 * (1 + bdd.top_var(f));  // var i of the order is AIG var i+1
        int lo = lower(bdd.lo(f)), hi = lower(bdd.hi(f));
        int r = bor(band(v, hi), band(v ^ 1, lo));
        memo.emplace(f, r);
        return r;
    }
};

}  // namespace

Circuit to_circuit(const MealyMachine& m, const StateEncoding& enc) {
    int n_in = m.sigma.n_in(), n_out = m.sigma.n_out();
    std::uint32_t ni = 1u << n_in;
    int L = enc.bits;
    if (enc.code[m.init] != 0) throw std::logic_error("to_circuit: q0 not all-zero");

    // variable order: inputs 0..n_in-1, then state bits
    Bdd bdd(n_in + L);
    std::vector<int> in_vars(n_in), st_vars(L);
    for (int i = 0; i < n_in; i++) in_vars[i] = i;
    for (int l = 0; l < L; l++) st_vars[l] = n_in + l;

    // care set: reachable state codes (any input)
    Bdd::Ref care = Bdd::zero();
    std::vector<Bdd::Ref> state_cube(m.n_states());
    for (int s = 0; s < m.n_states(); s++) {
        state_cube[s] = bdd.minterm(st_vars, enc.code[s]);
        care = bdd.bor(care, state_cube[s]);
    }

    std::vector<Bdd::Ref> next_on(L, Bdd::zero());
    std::vector<Bdd::Ref> out_on(n_out, Bdd::zero());
    std::vector<Bdd::Ref> out_spec(n_out, Bdd::zero());  // where the bit is specified
    for (int s = 0; s < m.n_states(); s++) {
        for (std::uint32_t i = 0; i < ni; i++) {
            Bdd::Ref cell = bdd.band(state_cube[s], bdd.minterm(in_vars, i));
            std::uint32_t code = enc.code[m.rows[s].succ[i]];
            for (int l = 0; l < L; l++)
                if (code >> l & 1) next_on[l] = bdd.bor(next_on[l], cell);
            const Cube& o = m.rows[s].out[i];
            for (int b = 0; b < n_out; b++) {
                if (!(o.mask >> b & 1)) continue;
                out_spec[b] = bdd.bor(out_spec[b], cell);
                if (o.value >> b & 1) out_on[b] = bdd.bor(out_on[b], cell);
            }
        }
    }

    Circuit c;
    c.n_inputs = n_in;
    c.n_latches = L;
    Lowerer low{bdd, c, {}, {}};
    for (int l = 0; l < L; l++)
        c.next.push_back(low.lower(bdd.restrict(next_on[l], care)));
    for (int b = 0; b < n_out; b++)
        c.outs.push_back(low.lower(bdd.restrict(out_on[b], bdd.band(care, out_spec[b]))));
    return c;
}

CircuitArtifact portfolio_circuit(const MealyMachine& m) {
    std::vector<CircuitArtifact> cands;
    MealyMachine red = reduce_mealy(m);
    cands.push_back({to_circuit(red, encode(red, EncodingMode::Unstructured)), "",
                     "reduced+unstructured"});
    if (m.shaped())
        cands.push_back({to_circuit(m, encode(m, EncodingMode::Structured)), "", "raw+structured"});
    cands.push_back({to_circuit(m, encode(m, EncodingMode::Unstructured)), "", "raw+unstructured"});
    for (auto& a : cands) a.aag = write_aiger(a.circuit);
    CircuitArtifact* best = &cands[0];
    for (auto& a : cands)
        if (a.circuit.size() < best->circuit.size() ||
            (a.circuit.size() == best->circuit.size() && a.aag < best->aag))
            best = &a;
    return std::move(*best);
}

}  // namespace pgsynth
