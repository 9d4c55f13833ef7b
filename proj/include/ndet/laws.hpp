#pragma once

#include <span>
#include <string>
#include <vector>

#include "ndet/eval.hpp"
#include "ndet/json_io.hpp"
#include "ndet/term.hpp"

namespace ndet {

// One instantiation of the identities' metavariables, all as closed terms
// (body is closed except for the recursor's own bound names).
//
// The unfolding identity (recur over cons) is stated for a list *value* in
// the tail position, so generators must keep `t` deterministic: with a
// multi-choice tail the two sides genuinely differ for bodies that ignore
// their arguments (the left side contributes once per alternative).
struct LawCase {
    TermPtr x;     // int
    TermPtr h;     // int
    TermPtr t;     // deterministic list
    TermPtr n;     // list
    TermPtr l1;    // list
    TermPtr l2;    // list
    TermPtr l3;    // list
    TermPtr body;  // recursor body over h / t / (r)
};

struct LawPair {
    std::string law;
    TermPtr lhs;
    TermPtr rhs;
};

// The seven identities instantiated at one case, in a fixed order:
// recur-nil, recur-cons, cons-fail, cons-choice, recur-fail, recur-choice,
// choice-assoc.
std::vector<LawPair> lawInstances(const LawCase& c);

inline constexpr std::size_t kLawCount = 7;

struct LawOutcome {
    std::string law;
    std::size_t cases = 0;
    std::size_t violations = 0;
    // First few offending instantiations, printed.
    std::vector<std::string> samples;
};

// Evaluates both sides of every identity at every case and compares the
// observed bags for exact sequence equality.
template <Semantics S>
std::vector<LawOutcome> lawSuite(S& sem, std::span<const LawCase> cases) {
    if constexpr (!ObservableSemantics<S>) {
        (void)sem;
        (void)cases;
        throw CapabilityError("law suite needs an observable backend (runObs)");
    } else {
        std::vector<LawOutcome> out;
        bool first = true;
        for (const LawCase& c : cases) {
            std::vector<LawPair> pairs = lawInstances(c);
            if (first) {
                out.resize(pairs.size());
                for (std::size_t i = 0; i < pairs.size(); i++) out[i].law = pairs[i].law;
                first = false;
            }
            for (std::size_t i = 0; i < pairs.size(); i++) {
                out[i].cases++;
                ChoiceBag lhs = sem.runObs(evalWith(sem, *pairs[i].lhs));
                ChoiceBag rhs = sem.runObs(evalWith(sem, *pairs[i].rhs));
                if (lhs != rhs) {
                    out[i].violations++;
                    if (out[i].samples.size() < 3) {
                        out[i].samples.push_back(
                            "lhs " + printTerm(*pairs[i].lhs) + " = " + bagToJson(lhs) +
                            "; rhs " + printTerm(*pairs[i].rhs) + " = " + bagToJson(rhs));
                    }
                }
            }
        }
        if (first) {
            // No cases: still report the identities, each with zero runs.
            LawCase trivial{tInt(0), tInt(0), tNil(), tNil(), tNil(), tNil(), tNil(), tBoundT()};
            for (const LawPair& p : lawInstances(trivial)) out.push_back({p.law, 0, 0, {}});
        }
        return out;
    }
}

}  // namespace ndet
