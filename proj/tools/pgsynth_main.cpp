// pgsynth: LTL reactive synthesis via on-the-fly parity games.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pgsynth/aiger.hpp"
#include "pgsynth/engine.hpp"
#include "pgsynth/parser.hpp"
#include "pgsynth/verify.hpp"

namespace {

using namespace pgsynth;

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct SpecFile {
    std::string ins, outs, ltl;
};

SpecFile read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    SpecFile sf;
    std::string line;
    std::string* cur = nullptr;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos) return std::string();
            return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
        };
        std::string t = strip(line);
        if (t.rfind("INPUTS:", 0) == 0) {
            cur = &sf.ins;
            *cur += strip(t.substr(7));
        } else if (t.rfind("OUTPUTS:", 0) == 0) {
            cur = &sf.outs;
            *cur += strip(t.substr(8));
        } else if (t.rfind("LTL:", 0) == 0) {
            cur = &sf.ltl;
            *cur += strip(t.substr(4));
        } else if (!t.empty()) {
            if (!cur) throw std::runtime_error("spec file: text before any section");
            *cur += " " + t;
        }
    }
    if (sf.ltl.empty()) throw std::runtime_error("spec file: missing LTL section");
    return sf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LTL reactive synthesis via on-the-fly parity games"};
    std::string ins, outs, formula, spec_path, mode = "synthesis", exploration = "bfs";
    std::string output = "aag", encoding = "portfolio", out_path;
    bool reduce = false, verify = false, stats = false;
    long max_states = 1000000;
    app.add_option("--ins", ins, "comma-separated input propositions");
    app.add_option("--outs", outs, "comma-separated output propositions");
    app.add_option("--formula", formula, "LTL formula");
    app.add_option("-f,--spec", spec_path, "spec file with INPUTS:/OUTPUTS:/LTL: sections");
    app.add_option("--mode", mode, "realizability | synthesis")
        ->check(CLI::IsMember({"realizability", "synthesis"}));
    app.add_option("--exploration", exploration, "bfs | bfs+ | pq | pq+")
        ->check(CLI::IsMember({"bfs", "bfs+", "pq", "pq+"}));
    app.add_option("--output", output, "mealy | aag | none")
        ->check(CLI::IsMember({"mealy", "aag", "none"}));
    app.add_option("--encoding", encoding, "unstructured | structured | portfolio")
        ->check(CLI::IsMember({"unstructured", "structured", "portfolio"}));
    app.add_flag("--reduce", reduce, "reduce the Mealy machine before encoding");
    app.add_flag("--verify", verify, "model-check the extracted controller");
    app.add_option("--max-states", max_states, "environment-node budget");
    app.add_flag("--stats", stats, "print exploration/solver statistics");
    app.add_option("-o,--out-file", out_path, "write the artifact to a file instead of stdout");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!spec_path.empty()) {
            SpecFile sf = read_spec_file(spec_path);
            if (ins.empty()) ins = sf.ins;
            if (outs.empty()) outs = sf.outs;
            if (formula.empty()) formula = sf.ltl;
        }
        if (formula.empty()) throw std::runtime_error("no formula given (--formula or -f)");
        Alphabet sigma(split_names(ins), split_names(outs));
        Formula phi = parse(formula, sigma);

        EngineOptions opts;
        opts.max_states = max_states;
        if (exploration == "bfs") opts.exploration = Exploration::Bfs;
        if (exploration == "bfs+") opts.exploration = Exploration::BfsPlus;
        if (exploration == "pq") opts.exploration = Exploration::Pq;
        if (exploration == "pq+") opts.exploration = Exploration::PqPlus;

        SynthesisOutcome res = synthesize(phi, sigma, opts);
        std::cout << (res.realizable ? "REALIZABLE" : "UNREALIZABLE") << "\n";
        if (stats) {
            std::cout << "stats: env_nodes=" << res.stats.env_nodes
                      << " iterations=" << res.stats.iterations
                      << " solve_calls=" << res.stats.solve_calls
                      << " wall_s=" << res.stats.wall_seconds << "\n";
        }
        int code = res.realizable ? 10 : 20;
        bool want_artifact = mode == "synthesis" && res.realizable && output != "none";
        if (res.realizable && (want_artifact || verify)) {
            MealyMachine m = extract_mealy(*res.arena, *res.dpa, res.strategy, res.won);
            if (verify && !verify_controller(m, *res.dpa)) {
                std::cerr << "error: extracted controller failed verification\n";
                return 2;
            }
            std::string artifact;
            if (want_artifact && output == "mealy") {
                MealyMachine mm = reduce ? reduce_mealy(m) : m;
                artifact = mm.dump();
            } else if (want_artifact) {
                if (encoding == "portfolio") {
                    artifact = portfolio_circuit(m).aag;
                } else {
                    MealyMachine mm = reduce ? reduce_mealy(m) : m;
                    EncodingMode em = encoding == "structured" ? EncodingMode::Structured
                                                               : EncodingMode::Unstructured;
                    artifact = write_aiger(to_circuit(mm, encode(mm, em)));
                }
            }
            if (!artifact.empty()) {
                if (out_path.empty()) {
                    std::cout << artifact;
                } else {
                    std::ofstream of(out_path);
                    of << artifact;
                    if (!of) throw std::runtime_error("cannot write " + out_path);
                }
            }
        }
        return code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const UnsupportedFragment& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
}
