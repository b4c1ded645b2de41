// ASCII AIGER (aag) writer and strict reader.
#ifndef PGSYNTH_AIGER_HPP
#define PGSYNTH_AIGER_HPP

#include <stdexcept>
#include <string>

#include "pgsynth/circuit.hpp"

namespace pgsynth {

struct AigerError : std::runtime_error {
    explicit AigerError(const std::string& m) : std::runtime_error("aiger: " + m) {}
};

// header `aag M I L O A`, inputs in Ap_in order, latches with reset 0,
// outputs in Ap_out order, then and-gates
std::string write_aiger(const Circuit& c);

// strict grammar check; throws AigerError on any deviation
Circuit parse_aiger(const std::string& text);

}  // namespace pgsynth

#endif
