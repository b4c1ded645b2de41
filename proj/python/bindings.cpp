// pybind11 module: a thin synthesis front end over the C++ engine.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pgsynth/circuit.hpp"
#include "pgsynth/engine.hpp"
#include "pgsynth/parser.hpp"
#include "pgsynth/verify.hpp"

namespace py = pybind11;
using namespace pgsynth;

namespace {

struct Result {
    bool realizable = false;
    std::string mealy;        // transition table, empty when unrealizable
    std::string aag;          // portfolio circuit, empty when unrealizable
    std::string combination;  // which encoding the portfolio picked
    int n_states = 0;
    bool verified = false;
    long env_nodes = 0;
    int iterations = 0;
    double wall_seconds = 0.0;
};

Exploration parse_exploration(const std::string& s) {
    if (s == "bfs") return Exploration::Bfs;
    if (s == "bfs+") return Exploration::BfsPlus;
    if (s == "pq") return Exploration::Pq;
    if (s == "pq+") return Exploration::PqPlus;
    throw std::invalid_argument("exploration must be one of bfs, bfs+, pq, pq+");
}

Result py_synthesize(const std::string& formula, const std::vector<std::string>& ins,
                     const std::vector<std::string>& outs, const std::string& exploration,
                     long max_states, bool verify) {
    Alphabet sigma(ins, outs);
    Formula phi = parse(formula, sigma);
    EngineOptions opts;
    opts.exploration = parse_exploration(exploration);
    opts.max_states = max_states;
    SynthesisOutcome res = synthesize(phi, sigma, opts);

    Result out;
    out.realizable = res.realizable;
    out.env_nodes = res.stats.env_nodes;
    out.iterations = res.stats.iterations;
    out.wall_seconds = res.stats.wall_seconds;
    if (res.realizable) {
        MealyMachine m = extract_mealy(*res.arena, *res.dpa, res.strategy, res.won);
        out.mealy = m.dump();
        out.n_states = m.n_states();
        CircuitArtifact art = portfolio_circuit(m);
        out.aag = art.aag;
        out.combination = art.combination;
        if (verify && !verify_controller(m, *res.dpa))
            throw std::runtime_error("extracted controller failed verification");
        out.verified = verify;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_pgsynth, mod) {
    mod.doc() = "LTL reactive synthesis via on-the-fly parity games";

    py::class_<Result>(mod, "SynthesisResult")
        .def_readonly("realizable", &Result::realizable)
        .def_readonly("mealy", &Result::mealy)
        .def_readonly("aag", &Result::aag)
        .def_readonly("combination", &Result::combination)
        .def_readonly("n_states", &Result::n_states)
        .def_readonly("verified", &Result::verified)
        .def_readonly("env_nodes", &Result::env_nodes)
        .def_readonly("iterations", &Result::iterations)
        .def_readonly("wall_seconds", &Result::wall_seconds)
        .def("__repr__", [](const Result& r) {
            return std::string("SynthesisResult(") +
                   (r.realizable ? "REALIZABLE" : "UNREALIZABLE") +
                   ", n_states=" + std::to_string(r.n_states) + ")";
        });

    mod.def("synthesize", &py_synthesize, py::arg("formula"), py::arg("ins"), py::arg("outs"),
            py::arg("exploration") = "bfs", py::arg("max_states") = 1000000L,
            py::arg("verify") = true,
            "Run synthesis for an LTL formula over the given input/output propositions.");

    mod.def("quality", &quality, py::arg("n"), py::arg("r"),
            "Competition quality points for a circuit of size n against reference size r.");

    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedFragment>(mod, "UnsupportedFragment", PyExc_ValueError);
    py::register_exception<ResourceLimit>(mod, "ResourceLimit", PyExc_RuntimeError);
}
