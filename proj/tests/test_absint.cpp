#include <doctest.h>

#include <random>
#include <vector>

#include "ndet/absint.hpp"
#include "ndet/eval.hpp"
#include "ndet/list_backend.hpp"
#include "ndet/programs.hpp"
#include "ndet/term.hpp"
#include "ndet/testkit.hpp"

using namespace ndet;

namespace {

NdetDeg randomDeg(std::mt19937_64& rng) {
    NdetDeg d;
    d.can_fail = rng() % 2 == 0;
    switch (rng() % 4) {
        case 0: d.choices = ExtNat::inf(); break;
        default: d.choices = ExtNat::fin(rng() % 5); break;
    }
    return d;
}

}  // namespace

TEST_SUITE("absint") {
    TEST_CASE("extended-natural arithmetic") {
        auto inf = ExtNat::inf();
        CHECK(extPlus(ExtNat::fin(2), ExtNat::fin(3)) == ExtNat::fin(5));
        CHECK(extPlus(inf, ExtNat::fin(1)) == inf);
        CHECK(extPlus(ExtNat::fin(0), inf) == inf);
        CHECK(extTimes(ExtNat::fin(2), ExtNat::fin(3)) == ExtNat::fin(6));
        CHECK(extTimes(inf, ExtNat::fin(2)) == inf);
        // Deliberately absorbing even at zero: the analysis wants a simple
        // upper bound, not exact arithmetic.
        CHECK(extTimes(ExtNat::fin(0), inf) == inf);
        CHECK(extMax(ExtNat::fin(2), ExtNat::fin(7)) == ExtNat::fin(7));
        CHECK(extMax(inf, ExtNat::fin(7)) == inf);
        CHECK(extMin(ExtNat::fin(2), ExtNat::fin(7)) == ExtNat::fin(2));
        CHECK(extMin(inf, ExtNat::fin(7)) == ExtNat::fin(7));
        CHECK(extMin(inf, inf) == inf);
        CHECK(extLeq(ExtNat::fin(3), ExtNat::fin(3)));
        CHECK(extLeq(ExtNat::fin(3), inf));
        CHECK_FALSE(extLeq(inf, ExtNat::fin(3)));
        CHECK(extLeq(inf, inf));
        CHECK(extToText(inf) == "inf");
        CHECK(extToText(ExtNat::fin(12)) == "12");
    }

    TEST_CASE("arithmetic saturates instead of wrapping") {
        auto big = ExtNat::fin(~std::uint64_t{0} - 1);
        CHECK(extPlus(big, ExtNat::fin(5)) == ExtNat::inf());
        CHECK(extTimes(big, ExtNat::fin(3)) == ExtNat::inf());
    }

    TEST_CASE("degree lattice basics") {
        CHECK(degDet() == NdetDeg{false, ExtNat::fin(1)});
        CHECK(degTop() == NdetDeg{true, ExtNat::inf()});
        CHECK(degJoin(degDet(), degTop()) == degTop());
        CHECK(degMerge(degDet(), degTop()) == degTop());
        CHECK(degLeq(degDet(), degTop()));
        CHECK_FALSE(degLeq(degTop(), degDet()));
        CHECK(degToText(degTop()) == "{can_fail=true, choices=inf}");
        CHECK(degToText(degDet()) == "{can_fail=false, choices=1}");
    }

    TEST_CASE("lattice and monotonicity laws on random degrees") {
        std::mt19937_64 rng(42);
        for (int i = 0; i < 500; i++) {
            NdetDeg a = randomDeg(rng), b = randomDeg(rng), c = randomDeg(rng);
            // join: commutative, associative, idempotent, and an upper bound
            CHECK(degJoin(a, b) == degJoin(b, a));
            CHECK(degJoin(a, degJoin(b, c)) == degJoin(degJoin(a, b), c));
            CHECK(degJoin(a, a) == a);
            CHECK(degLeq(a, degJoin(a, b)));
            CHECK(degLeq(b, degJoin(a, b)));
            // everything sits between det-or-below and top
            CHECK(degLeq(a, degTop()));
            // merge: unit det, monotone in both arguments
            CHECK(degMerge(a, degDet()) == a);
            CHECK(degMerge(degDet(), a) == a);
            if (degLeq(a, b)) {
                CHECK(degLeq(degMerge(a, c), degMerge(b, c)));
                CHECK(degLeq(degJoin(a, c), degJoin(b, c)));
            }
        }
    }

    TEST_CASE("abstract operator table") {
        AbsBackend ab;
        CHECK(ab.mkNil() == degDet());
        std::vector<int> xs{1, 2};
        CHECK(ab.mkList(xs) == degDet());
        CHECK(ab.mkFail() == NdetDeg{true, ExtNat::fin(1)});
        CHECK(ab.mkCons(AbsInt{}, degTop()) == degTop());
        // choice fails only when both sides can; alternatives add up
        CHECK(ab.mkChoice(degDet(), ab.mkFail()) == NdetDeg{false, ExtNat::fin(2)});
        CHECK(ab.mkChoice(ab.mkFail(), ab.mkFail()) == NdetDeg{true, ExtNat::fin(2)});
        // restriction may drop everything; commitment caps at one
        CHECK(ab.mkRId(Pred::sorted(), degDet()) == NdetDeg{true, ExtNat::fin(1)});
        CHECK(ab.mkRId(Pred::sorted(), NdetDeg{false, ExtNat::fin(5)}) ==
              NdetDeg{true, ExtNat::fin(5)});
        CHECK(ab.mkOnce(NdetDeg{true, ExtNat::fin(5)}) == NdetDeg{true, ExtNat::fin(1)});
        CHECK(ab.mkOnce(NdetDeg{false, ExtNat::inf()}) == NdetDeg{false, ExtNat::fin(1)});
    }

    TEST_CASE("golden degrees") {
        // cons 20 (nil ||| cons 10 nil) ||| fail: three outcomes, no failure
        auto g1 = tChoice(tCons(tInt(20), tChoice(tNil(), tCons(tInt(10), tNil()))), tFail());
        CHECK(analyze(*g1) == NdetDeg{false, ExtNat::fin(3)});
        // foldr cons nil [1,2,3] is deterministic
        auto g2 = tRecur(tCons(tBoundH(), tBoundR()), tNil(), tList({1, 2, 3}));
        CHECK(analyze(*g2) == NdetDeg{false, ExtNat::fin(1)});
        // recur with a body that always fails, seeded with a two-way choice
        auto g3 = tRecur(tFail(), tChoice(tList({1}), tList({2})), tNil());
        CHECK(analyze(*g3) == NdetDeg{true, ExtNat::fin(2)});
        // foldr (fun x l -> l ||| cons x l): the accumulator never stabilizes
        auto g4 = tRecur(tChoice(tBoundR(), tCons(tBoundH(), tBoundR())), tNil(), tList({1, 2, 3}));
        CHECK(analyze(*g4) == NdetDeg{true, ExtNat::inf()});
        // the permutation program, analyzed by running it on this backend
        AbsBackend ab;
        std::vector<int> input{1, 2, 3};
        CHECK(permNd(ab, ab.mkList(input)) == degTop());
    }

    TEST_CASE("more degree spot checks") {
        CHECK(analyze(*tFail()) == NdetDeg{true, ExtNat::fin(1)});
        CHECK(analyze(*tChoice(tFail(), tFail())) == NdetDeg{true, ExtNat::fin(2)});
        CHECK(analyze(*tOnce(tChoice(tNil(), tNil()))) == NdetDeg{false, ExtNat::fin(1)});
        CHECK(analyze(*tRId(Pred::sumEven(), tList({1, 2}))) == NdetDeg{true, ExtNat::fin(1)});
        auto ins = insertTerm(1, std::vector<int>{2, 3});
        CHECK(analyze(*ins) == degTop());
        AbsBackend ab;
        std::vector<int> input{3, 1, 2};
        // sort commits: at most one answer, but the filter may drop all
        CHECK(sortNd(ab, ab.mkList(input)) == NdetDeg{true, ExtNat::fin(1)});
    }

    TEST_CASE("estimates never undercount on 500 generated terms") {
        GenConfig cfg;
        cfg.seed = 42;
        for (int i = 0; i < 500; i++) {
            GenConfig c = cfg;
            c.seed = cfg.seed + i;
            auto t = genTerm(c);
            NdetDeg deg = analyze(*t);
            ListBackend lb;
            ChoiceBag bag = lb.runObs(evalWith(lb, *t));
            CAPTURE(printTerm(*t));
            CHECK(extLeq(ExtNat::fin(bag.size()), deg.choices));
            if (!deg.can_fail) CHECK_FALSE(bag.empty());
        }
    }

    TEST_CASE("soundness also holds without committed choice in the mix") {
        GenConfig cfg;
        cfg.seed = 2024;
        cfg.committedChoice = false;
        for (int i = 0; i < 500; i++) {
            GenConfig c = cfg;
            c.seed = cfg.seed + i;
            auto t = genTerm(c);
            NdetDeg deg = analyze(*t);
            ListBackend lb;
            ChoiceBag bag = lb.runObs(evalWith(lb, *t));
            CAPTURE(printTerm(*t));
            CHECK(extLeq(ExtNat::fin(bag.size()), deg.choices));
            if (!deg.can_fail) CHECK_FALSE(bag.empty());
        }
    }
}
