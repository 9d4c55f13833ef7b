#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ndet/laws.hpp"
#include "ndet/term.hpp"

namespace ndet {

struct GenConfig {
    int maxDepth = 5;
    int maxLitLen = 4;
    int minInt = 0;
    int maxInt = 9;
    std::uint64_t seed = 42;
    bool committedChoice = true;
};

// All permutations of xs, computed by plain positional insertion — no DSL
// machinery involved — in the order the insertion recurrence produces them:
// the new element goes to the front first, then one position deeper, and so
// on.  Input length is capped at 8 (8! alternatives).
ChoiceBag permOracle(std::span<const int> xs);

// Closed, sort-correct term; a pure function of the config (same seed, same
// term).
TermPtr genTerm(const GenConfig& cfg);

// Metavariable instantiation for the identities; `t` is kept deterministic
// (see LawCase).
LawCase genLawCase(const GenConfig& cfg);

struct CrossReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Runs one term through every pipeline and checks they agree: the chunked
// observation and the compiled-then-executed bag must equal the list
// observation exactly, and the analysis must bound it soundly.
CrossReport crossCheck(const Term& t);

}  // namespace ndet
