#pragma once

#include <cstdint>
#include <string>

#include "ndet/semantics.hpp"
#include "ndet/term.hpp"

namespace ndet {

// Naturals extended with infinity.  The arithmetic follows the semiring used
// by the analysis: any operation touching Inf yields Inf — including
// 0 * Inf = Inf, which is deliberate (the analysis only ever needs an upper
// bound, and this keeps the catch-all arm simple).
struct ExtNat {
    bool isInf = false;
    std::uint64_t n = 0;

    static ExtNat fin(std::uint64_t v) { return {false, v}; }
    static ExtNat inf() { return {true, 0}; }

    bool operator==(const ExtNat&) const = default;
};

ExtNat extPlus(ExtNat a, ExtNat b);
ExtNat extTimes(ExtNat a, ExtNat b);
ExtNat extMax(ExtNat a, ExtNat b);
ExtNat extMin(ExtNat a, ExtNat b);
bool extLeq(ExtNat a, ExtNat b);
std::string extToText(ExtNat a);

// The abstraction-domain element: may the computation fail, and how many
// alternatives can it have at most.
struct NdetDeg {
    bool can_fail = false;
    ExtNat choices = ExtNat::fin(1);

    bool operator==(const NdetDeg&) const = default;
};

// Deterministic computations: cannot fail, exactly one alternative.
NdetDeg degDet();
// The least informative estimate.
NdetDeg degTop();
// Pointwise least upper bound.
NdetDeg degJoin(NdetDeg a, NdetDeg b);
// Sequential combination: (or, times); degDet is its unit.
NdetDeg degMerge(NdetDeg a, NdetDeg b);
// Pointwise order (false <= true on can_fail, extLeq on choices).
bool degLeq(NdetDeg a, NdetDeg b);
std::string degToText(NdetDeg d);

// Abstract integer: integer expressions are always deterministic.
struct AbsInt {
    bool operator==(const AbsInt&) const = default;
};

// The analyzing backend: the meaning of a list expression is its degree of
// nondeterminism.  The recursor joins the degrees of applying the body to
// lists of every length until the accumulator stabilizes, giving up with
// top after the iteration cap.
struct AbsBackend {
    using IntRep = AbsInt;
    using ListRep = NdetDeg;

    IntRep mkInt(int) { return {}; }

    ListRep mkNil() { return degDet(); }
    ListRep mkList(std::span<const int>) { return degDet(); }
    ListRep mkCons(IntRep, ListRep d) { return d; }
    ListRep mkFail() { return {true, ExtNat::fin(1)}; }

    ListRep mkChoice(ListRep d1, ListRep d2) {
        return {d1.can_fail && d2.can_fail, extPlus(d1.choices, d2.choices)};
    }

    ListRep mkRecur(RecurBody<AbsBackend> body, ListRep z, ListRep l) {
        NdetDeg acc = z;
        NdetDeg res = z;
        for (int i = 0;; i++) {
            NdetDeg prev = res;
            NdetDeg resNext = body(AbsInt{}, degDet(), [prev] { return prev; });
            NdetDeg accNext = degJoin(acc, resNext);
            if (accNext == acc) return degMerge(l, acc);
            if (i > 5) return degMerge(l, degTop());
            acc = accNext;
            res = resNext;
        }
    }

    // Filtering may throw every alternative away, but adds none.
    ListRep mkRId(const Pred&, ListRep d) { return {true, d.choices}; }

    // Committing keeps at most one alternative and fails iff the input does.
    ListRep mkOnce(ListRep d) { return {d.can_fail, extMin(d.choices, ExtNat::fin(1))}; }
};

static_assert(Semantics<AbsBackend>);

// Degree of nondeterminism of a closed list-sort term.
NdetDeg analyze(const Term& t);

}  // namespace ndet
