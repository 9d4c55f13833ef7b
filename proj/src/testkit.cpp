#include "ndet/testkit.hpp"

#include <random>

#include "ndet/absint.hpp"
#include "ndet/chunk.hpp"
#include "ndet/eval.hpp"
#include "ndet/json_io.hpp"
#include "ndet/list_backend.hpp"
#include "ndet/staged.hpp"

namespace ndet {

ChoiceBag permOracle(std::span<const int> xs) {
    if (xs.size() > 8) throw Error("permOracle: input longer than 8 elements");
    if (xs.empty()) return {{}};
    ChoiceBag rest = permOracle(xs.subspan(1));
    ChoiceBag out;
    out.reserve(rest.size() * (xs.size()));
    for (const auto& p : rest) {
        for (std::size_t i = 0; i <= p.size(); i++) {
            std::vector<int> q;
            q.reserve(p.size() + 1);
            q.insert(q.end(), p.begin(), p.begin() + i);
            q.push_back(xs[0]);
            q.insert(q.end(), p.begin() + i, p.end());
            out.push_back(std::move(q));
        }
    }
    return out;
}

namespace {

class Gen {
  public:
    explicit Gen(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    TermPtr list(int depth, bool inBody) {
        if (depth <= 1) return leaf();
        switch (pick(inBody ? 18 : 14)) {
            case 0:
                return tNil();
            case 1:
                return tFail();
            case 2:
            case 3:
                return literal();
            case 4:
            case 5:
            case 6:
                return tCons(intLeaf(inBody), list(depth - 1, inBody));
            case 7:
            case 8:
            case 9:
                return tChoice(list(depth - 1, inBody), list(depth - 1, inBody));
            case 10:
            case 11:
                // z and l of any recur are closed, whatever the current scope.
                return tRecur(body(depth - 1), list(depth - 1, false), list(depth - 1, false));
            case 12:
                if (cfg_.committedChoice) return tRId(pred(), list(depth - 1, inBody));
                return literal();
            case 13:
                if (cfg_.committedChoice) return tOnce(list(depth - 1, inBody));
                return tNil();
            default:
                // cases 14..17 are only drawn inside a recursor body
                return pick(2) == 0 ? tBoundT() : tBoundR();
        }
    }

    TermPtr leaf() {
        switch (pick(4)) {
            case 0:
                return tNil();
            case 1:
                return tFail();
            default:
                return literal();
        }
    }

    TermPtr body(int depth) {
        // Half the time use a canonical body: these exercise the recursor's
        // fixpoint paths (ignoring every argument, pure doubling, insertion).
        switch (pick(10)) {
            case 0:
                return tFail();
            case 1:
                return tNil();
            case 2:
                return tBoundT();
            case 3:
                return tCons(tBoundH(), tBoundR());  // foldr cons
            case 4:
                return tChoice(tBoundR(), tCons(tBoundH(), tBoundR()));  // doubles
            default:
                return list(depth, true);
        }
    }

    // Single-choice list term: no fail/choice/recur/rid/once anywhere.
    TermPtr detList(int depth) {
        if (depth <= 1 || pick(3) == 0) return literal();
        return tCons(tInt(num()), detList(depth - 1));
    }

    TermPtr intLeaf(bool inBody) {
        if (inBody && pick(2) == 0) return tBoundH();
        return tInt(num());
    }

    TermPtr literal() {
        std::vector<int> values(pick(cfg_.maxLitLen + 1));
        for (int& v : values) v = num();
        return tList(std::move(values));
    }

    Pred pred() {
        switch (pick(3)) {
            case 0:
                return Pred::sorted();
            case 1:
                return Pred::lenAtMost(pick(5));
            default:
                return Pred::sumEven();
        }
    }

    int num() {
        return cfg_.minInt + pick(static_cast<std::size_t>(cfg_.maxInt - cfg_.minInt + 1));
    }

  private:
    // Uniform in [0, n).
    std::size_t pick(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
    }

    GenConfig cfg_;
    std::mt19937_64 rng_;
};

}  // namespace

TermPtr genTerm(const GenConfig& cfg) {
    Gen g(cfg);
    return g.list(cfg.maxDepth < 1 ? 1 : cfg.maxDepth, false);
}

LawCase genLawCase(const GenConfig& cfg) {
    Gen g(cfg);
    int depth = cfg.maxDepth < 2 ? 2 : cfg.maxDepth;
    LawCase c;
    c.x = tInt(g.num());
    c.h = tInt(g.num());
    c.t = g.detList(depth - 1);
    c.n = g.list(depth - 1, false);
    c.l1 = g.list(depth - 1, false);
    c.l2 = g.list(depth - 1, false);
    c.l3 = g.list(depth - 1, false);
    c.body = g.body(depth - 1);
    return c;
}

CrossReport crossCheck(const Term& t) {
    CrossReport rep;
    std::string printed = printTerm(t);

    ListBackend list;
    ChoiceBag expected = list.runObs(evalWith(list, t));

    ChunkedBackend chunked;
    ChoiceBag viaChunks = chunked.runObs(evalWith(chunked, t));
    if (viaChunks != expected) {
        rep.violations.push_back("chunked backend disagrees on " + printed + ": " +
                                 bagToJson(viaChunks) + " vs " + bagToJson(expected));
    }

    ChoiceBag viaTarget = target::exec(*compileTerm(t));
    if (viaTarget != expected) {
        rep.violations.push_back("compiled program disagrees on " + printed + ": " +
                                 bagToJson(viaTarget) + " vs " + bagToJson(expected));
    }

    NdetDeg deg = analyze(t);
    if (!extLeq(ExtNat::fin(expected.size()), deg.choices)) {
        rep.violations.push_back("analysis undercounts " + printed + ": " +
                                 std::to_string(expected.size()) + " choices observed, " +
                                 degToText(deg) + " predicted");
    }
    if (!deg.can_fail && expected.empty()) {
        rep.violations.push_back("analysis claims " + printed +
                                 " cannot fail, but it observes as empty");
    }
    return rep;
}

}  // namespace ndet
