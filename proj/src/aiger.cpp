#include "pgsynth/aiger.hpp"

#include <sstream>

namespace pgsynth {

std::string write_aiger(const Circuit& c) {
    std::ostringstream os;
    int I = c.n_inputs, L = c.n_latches, O = c.n_outputs(), A = (int)c.gates.size();
    os << "aag " << (I + L + A) << " " << I << " " << L << " " << O << " " << A << "\n";
    for (int i = 0; i < I; i++) os << 2 * (1 + i) << "\n";
    for (int l = 0; l < L; l++) os << 2 * (1 + I + l) << " " << c.next[l] << "\n";
    for (int o = 0; o < O; o++) os << c.outs[o] << "\n";
    for (int g = 0; g < A; g++)
        os << 2 * (1 + I + L + g) << " " << c.gates[g].rhs0 << " " << c.gates[g].rhs1 << "\n";
    return os.str();
}

namespace {

int read_lit(std::istringstream& is, int max_var, const char* what) {
    long v;
    if (!(is >> v)) throw AigerError(std::string("missing ") + what);
    if (v < 0 || v > 2 * (long)max_var + 1)
        throw AigerError(std::string("literal out of range: ") + std::to_string(v));
    return (int)v;
}

}  // namespace

Circuit parse_aiger(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw AigerError("empty file");
    std::istringstream hs(line);
    std::string magic;
    int M, I, L, O, A;
    if (!(hs >> magic >> M >> I >> L >> O >> A) || magic != "aag")
        throw AigerError("bad header");
    std::string rest;
    if (hs >> rest) throw AigerError("trailing header tokens");
    if (M < 0 || I < 0 || L < 0 || O < 0 || A < 0 || M < I + L + A)
        throw AigerError("inconsistent header counts");
    Circuit c;
    c.n_inputs = I;
    c.n_latches = L;
    auto next_line = [&](const char* what) {
        if (!std::getline(is, line)) throw AigerError(std::string("missing ") + what);
        std::istringstream ls(line);
        return ls;
    };
    for (int i = 0; i < I; i++) {
        std::istringstream ls = next_line("input");
        int v = read_lit(ls, M, "input literal");
        if (v != 2 * (1 + i)) throw AigerError("inputs must be 2, 4, ... in order");
    }
    for (int l = 0; l < L; l++) {
        std::istringstream ls = next_line("latch");
        int v = read_lit(ls, M, "latch literal");
        if (v != 2 * (1 + I + l)) throw AigerError("latches must follow inputs in order");
        c.next.push_back(read_lit(ls, M, "latch next literal"));
        std::string extra;
        if (ls >> extra) throw AigerError("unsupported latch reset value");
    }
    for (int o = 0; o < O; o++) {
        std::istringstream ls = next_line("output");
        c.outs.push_back(read_lit(ls, M, "output literal"));
    }
    for (int g = 0; g < A; g++) {
        std::istringstream ls = next_line("and gate");
        int lhs = read_lit(ls, M, "gate literal");
        if (lhs != 2 * (1 + I + L + g)) throw AigerError("gates must be consecutive and ordered");
        int r0 = read_lit(ls, M, "gate operand");
        int r1 = read_lit(ls, M, "gate operand");
        if (r0 >= lhs || r1 >= lhs) throw AigerError("gate operands must precede the gate");
        c.gates.push_back({r0, r1});
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == 'c') break;  // comment section ends parsing
        if (line[0] == 'i' || line[0] == 'l' || line[0] == 'o') continue;  // symbols
        throw AigerError("unexpected trailing line: " + line);
    }
    return c;
}

}  // namespace pgsynth
