// Independent checking oracles: lasso membership for the automaton,
// model checking of extracted controllers, and the quality metric.
#ifndef PGSYNTH_VERIFY_HPP
#define PGSYNTH_VERIFY_HPP

#include <vector>

#include "pgsynth/mealy.hpp"

namespace pgsynth {

struct LassoWord {
    std::vector<Letter> prefix;
    std::vector<Letter> loop;  // nonempty
};

bool accepts_lasso(DpaHandle& h, const LassoWord& w);

enum class VerifyMode { DefaultCompletion, AllCompletions };

// product of the completed machine with the automaton where only the
// environment picks inputs; true iff no reachable cycle has a hostile
// minimal colour. AllCompletions enumerates unspecified output bits per
// transition (up to 8; beyond that the default completion is used and
// *warned is set).
bool verify_controller(const MealyMachine& m, DpaHandle& h,
                       VerifyMode mode = VerifyMode::DefaultCompletion, bool* warned = nullptr);

// competition quality points: max(0, 2 - log10((n+1)/(r+1)))
double quality(long n, long r);

}  // namespace pgsynth

#endif
