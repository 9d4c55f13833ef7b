#include "ndet/laws.hpp"

namespace ndet {

std::vector<LawPair> lawInstances(const LawCase& c) {
    std::vector<LawPair> out;
    out.reserve(kLawCount);

    // (1) the recursor's defining equations
    out.push_back({"recur-nil", tRecur(c.body, c.n, tNil()), c.n});
    out.push_back({"recur-cons", tRecur(c.body, c.n, tCons(c.h, c.t)),
                   substBody(*c.body, c.h, c.t, tRecur(c.body, c.n, c.t))});

    // (2) failure and choice
    out.push_back({"cons-fail", tCons(c.x, tFail()), tFail()});
    out.push_back({"cons-choice", tCons(c.x, tChoice(c.l1, c.l2)),
                   tChoice(tCons(c.x, c.l1), tCons(c.x, c.l2))});
    out.push_back({"recur-fail", tRecur(c.body, c.n, tFail()), tFail()});
    out.push_back({"recur-choice", tRecur(c.body, c.n, tChoice(c.l1, c.l2)),
                   tChoice(tRecur(c.body, c.n, c.l1), tRecur(c.body, c.n, c.l2))});
    out.push_back({"choice-assoc", tChoice(tChoice(c.l1, c.l2), c.l3),
                   tChoice(c.l1, tChoice(c.l2, c.l3))});

    return out;
}

}  // namespace ndet
