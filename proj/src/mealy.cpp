#include "pgsynth/mealy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pgsynth {

namespace {

int ceil_log2(int n) {
    int b = 0;
    while ((1 << b) < n) b++;
    return b;
}

bool cube_in_set(const Cube& c, const std::vector<char>& set, int n_vars) {
    for (std::uint32_t m = 0; m < (1u << n_vars); m++)
        if (c.contains(m) && !set[m]) return false;
    return true;
}

}  // namespace

Cube min_prime_implicant(const std::vector<char>& set, int n_vars) {
    bool any = false;
    std::uint32_t first = 0;
    for (std::uint32_t m = 0; m < (1u << n_vars); m++)
        if (set[m]) {
            if (!any) first = m;
            any = true;
        }
    if (!any) throw std::logic_error("min_prime_implicant: empty set");
    if (n_vars <= 12) {
        // exact: cubes by increasing literal count, then mask, then value
        for (int k = 0; k <= n_vars; k++)
            for (std::uint32_t mask = 0; mask < (1u << n_vars); mask++) {
                if (std::popcount(mask) != k) continue;
                std::uint32_t v = 0;
                do {
                    Cube c{mask, v};
                    if (cube_in_set(c, set, n_vars)) return c;
                    v = (v - mask) & mask;  // next submask, ascending
                } while (v != 0);
            }
        throw std::logic_error("min_prime_implicant: unreachable");
    }
    // greedy: start at one minterm, drop literals that keep the cube inside
    Cube c{(1u << n_vars) - 1, first};
    for (int i = 0; i < n_vars; i++) {
        Cube t = c;
        t.mask &= ~(1u << i);
        t.value &= t.mask;
        if (cube_in_set(t, set, n_vars)) c = t;
    }
    return c;
}

MealyMachine extract_mealy(const Arena& a, DpaHandle& h, const Strategy& sigma,
                           const std::vector<char>& won) {
    const Alphabet& ab = h.alphabet();
    int n_in = ab.n_in(), n_out = ab.n_out();
    std::uint32_t ni = 1u << n_in, no = 1u << n_out;

    MealyMachine m;
    m.sigma = ab;
    std::unordered_map<int, int> id;  // arena env node -> machine state
    std::vector<int> order;           // machine state -> arena env node
    auto state_of = [&](int v) {
        auto it = id.find(v);
        if (it != id.end()) return it->second;
        int s = (int)order.size();
        id.emplace(v, s);
        order.push_back(v);
        return s;
    };
    if (!won[a.initial()]) throw std::logic_error("extract_mealy: strategy does not win q0");
    state_of(a.initial());

    for (int s = 0; s < (int)order.size(); s++) {
        int v = order[s];
        const ArenaNode& nv = a.node(v);
        MealyMachine::Row row;
        row.succ.assign(ni, 0);
        row.out.assign(ni, Cube{0, 0});
        m.product.push_back(nv.q);
        if (nv.q.is_sink()) {  // TOP: anything goes, stay put
            for (std::uint32_t i = 0; i < ni; i++) row.succ[i] = s;
            m.rows.push_back(std::move(row));
            continue;
        }
        const TransitionGroup& cells = h.successors(nv.q);
        for (const ArenaEdge& env_e : nv.edges) {
            int mid = env_e.to;
            const ArenaNode& nm = a.node(mid);
            const std::vector<int>& allowed = sigma.edges[mid];
            if (allowed.empty())
                throw std::logic_error("extract_mealy: winning strategy gave up");
            // pick the successor: already-constructed states first, then the
            // one reachable with the most output flexibility, then node id
            std::map<int, long> flex;  // arena succ node -> sum of |O|
            for (int ei : allowed) {
                const ArenaEdge& e = nm.edges[ei];
                flex[e.to] += cells[e.cell].n_outputs;
            }
            int best = -1;
            bool best_in = false;
            long best_flex = -1;
            for (auto& [w, fx] : flex) {
                bool in_q = id.count(w) != 0;
                if (best < 0 || std::tuple(in_q, fx, -w) > std::tuple(best_in, best_flex, -best)) {
                    best = w;
                    best_in = in_q;
                    best_flex = fx;
                }
            }
            int succ_state = state_of(best);
            // allowed outputs for the chosen successor
            std::vector<char> out_set(no, 0);
            for (int ei : allowed) {
                const ArenaEdge& e = nm.edges[ei];
                if (e.to != best) continue;
                for (const Cube& oc : cells[e.cell].outs)
                    for (std::uint32_t o = 0; o < no; o++)
                        if (oc.contains(o)) out_set[o] = 1;
            }
            Cube out = min_prime_implicant(out_set, n_out);
            // the whole input class maps to this choice
            const Cell& c0 = cells[nm.edges[allowed[0]].cell];
            for (const Cube& ic : c0.ins)
                for (std::uint32_t i = 0; i < ni; i++)
                    if (ic.contains(i)) {
                        row.succ[i] = succ_state;
                        row.out[i] = out;
                    }
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

MealyMachine reduce_mealy(const MealyMachine& m) {
    int n = m.n_states();
    std::uint32_t ni = 1u << m.sigma.n_in();
    std::vector<int> block(n, 0);
    for (;;) {
        std::map<std::vector<std::int64_t>, int> sig_block;
        std::vector<int> next(n);
        for (int s = 0; s < n; s++) {
            std::vector<std::int64_t> sig;
            sig.reserve(3 * ni + 1);
            sig.push_back(block[s]);
            for (std::uint32_t i = 0; i < ni; i++) {
                sig.push_back(block[m.rows[s].succ[i]]);
                sig.push_back(m.rows[s].out[i].mask);
                sig.push_back(m.rows[s].out[i].value);
            }
            auto it = sig_block.emplace(std::move(sig), (int)sig_block.size()).first;
            next[s] = it->second;
        }
        // renumber by first occurrence for determinism
        std::vector<int> remap((int)sig_block.size(), -1);
        int k = 0;
        for (int s = 0; s < n; s++)
            if (remap[next[s]] < 0) remap[next[s]] = k++;
        for (int s = 0; s < n; s++) next[s] = remap[next[s]];
        if (next == block) break;
        block = next;
    }
    int nb = *std::max_element(block.begin(), block.end()) + 1;
    if (nb == n) return m;
    // make the initial state's block number 0
    int ib = block[m.init];
    for (int& b : block)
        b = b == ib ? 0 : b == 0 ? ib : b;
    MealyMachine r;
    r.sigma = m.sigma;
    r.init = 0;
    r.rows.resize(nb);
    std::vector<char> done(nb, 0);
    for (int s = 0; s < n; s++) {
        int b = block[s];
        if (done[b]) continue;
        done[b] = 1;
        MealyMachine::Row row = m.rows[s];
        for (std::uint32_t i = 0; i < ni; i++) row.succ[i] = block[row.succ[i]];
        r.rows[b] = std::move(row);
    }
    return r;  // product shape dropped
}

namespace {

// structured components: pre-order leaf positions with the counter/memory
// slot after a node's children; keyed by the path from the root
struct Component {
    std::vector<int> path;
    bool is_aux;
};

void collect_components(const State& s, std::vector<int>& path, std::vector<Component>& out) {
    if (s.kind() == SKind::Node) {
        for (int i = 0; i < (int)s.kids().size(); i++) {
            path.push_back(i);
            collect_components(s.kid(i), path, out);
            path.pop_back();
        }
        if (s.aux() >= 0) out.push_back({path, true});
    } else {
        out.push_back({path, false});
    }
}

// component value key: the leaf state (or the sink that swallowed the
// subtree), plus the counter value for aux components
struct CompKey {
    State st;
    int aux = -1;
    bool operator==(const CompKey&) const = default;
};

CompKey key_at(const State& root, const Component& c) {
    State s = root;
    for (int i : c.path) {
        if (s.is_sink()) return {s, -1};
        s = s.kid(i);
    }
    if (s.is_sink()) return {s, -1};
    if (c.is_aux) return {State(), s.aux()};
    return {s, -1};
}

}  // namespace

StateEncoding encode(const MealyMachine& m, EncodingMode mode) {
    StateEncoding enc;
    int n = m.n_states();
    if (mode == EncodingMode::Unstructured) {
        enc.bits = ceil_log2(n);
        enc.code.resize(n);
        for (int s = 0; s < n; s++) enc.code[s] = (std::uint32_t)s;
        std::swap(enc.code[m.init], enc.code[0]);
        return enc;
    }
    if (!m.shaped()) throw std::logic_error("encode: structured mode on shape-erased states");
    std::vector<Component> comps;
    std::vector<int> path;
    collect_components(m.product[m.init], path, comps);
    enc.code.assign(n, 0);
    for (const Component& c : comps) {
        std::vector<CompKey> values;  // first-occurrence numbering
        std::vector<std::uint32_t> val(n);
        for (int s = 0; s < n; s++) {
            CompKey k = key_at(m.product[s], c);
            auto it = std::find(values.begin(), values.end(), k);
            if (it == values.end()) {
                values.push_back(k);
                it = values.end() - 1;
            }
            val[s] = (std::uint32_t)(it - values.begin());
        }
        int bits = std::max(1, ceil_log2((int)values.size()));
        for (int s = 0; s < n; s++) enc.code[s] = (enc.code[s] << bits) | val[s];
        enc.bits += bits;
    }
    // injectivity check (distinct product states must encode distinctly)
    for (int s = 0; s < n; s++)
        for (int t = s + 1; t < n; t++)
            if (enc.code[s] == enc.code[t]) throw std::logic_error("encode: collision");
    return enc;
}

std::string MealyMachine::dump() const {
    std::ostringstream os;
    int n_in = sigma.n_in(), n_out = sigma.n_out();
    std::uint32_t ni = 1u << n_in;
    std::vector<std::string> in_names, out_names;
    for (int k = 0; k < n_in; k++) in_names.push_back(sigma.name(k));
    for (int k = 0; k < n_out; k++) out_names.push_back(sigma.name(n_in + k));
    os << "mealy states " << n_states() << " init " << init << "\n";
    for (int s = 0; s < n_states(); s++) {
        // group input minterms with the same behaviour into cubes
        std::map<std::tuple<int, std::uint32_t, std::uint32_t>, std::vector<char>> groups;
        for (std::uint32_t i = 0; i < ni; i++) {
            auto key = std::tuple(rows[s].succ[i], rows[s].out[i].mask, rows[s].out[i].value);
            auto& set = groups[key];
            set.resize(ni, 0);
            set[i] = 1;
        }
        for (auto& [key, set] : groups) {
            auto [succ, omask, oval] = key;
            for (const Cube& ic : cube_cover(set, n_in))
                os << s << " " << cube_to_string(ic, in_names) << " -> " << succ << " / "
                   << cube_to_string(Cube{omask, oval}, out_names) << "\n";
        }
    }
    return os.str();
}

}  // namespace pgsynth
