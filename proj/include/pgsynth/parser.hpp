#ifndef PGSYNTH_PARSER_HPP
#define PGSYNTH_PARSER_HPP

#include <stdexcept>
#include <string>

#include "pgsynth/formula.hpp"

namespace pgsynth {

struct ParseError : std::runtime_error {
    int position;
    ParseError(const std::string& msg, int pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar (loosest to tightest): <->, ->, |, &, U/R (right associative),
// unary ! X F G, atoms/constants/parentheses. `->` is eliminated as !a | b,
// negation is pushed down to literals, F/G are desugared. A biconditional
// inside the scope of X/U/R/F/G is rewritten to (a & b) | (!a & !b); Iff
// nodes survive only at the Boolean layer.
Formula parse(const std::string& text, const Alphabet& alphabet);

}  // namespace pgsynth

#endif
