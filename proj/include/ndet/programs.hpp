#pragma once

#include "ndet/semantics.hpp"

namespace ndet {

// The program library, written once against the abstract Semantics and
// reusable with every backend: run them concretely, analyze them, or
// compile them by passing a different implementation.

// foldr c z l, with c supplied as a recursor body that ignores the tail.
template <Semantics S, typename F>
typename S::ListRep foldrNd(S& s, F step, typename S::ListRep z, typename S::ListRep l) {
    RecurBody<S> body = [step](typename S::IntRep h, typename S::ListRep, ListThunk<S> r) {
        return step(h, r());
    };
    return s.mkRecur(std::move(body), std::move(z), std::move(l));
}

// All ways of inserting x somewhere into l: at the front, or (keeping the
// head) somewhere into the tail.
template <Semantics S>
typename S::ListRep insertNd(S& s, typename S::IntRep x, typename S::ListRep l) {
    RecurBody<S> body = [&s, x](typename S::IntRep h, typename S::ListRep t, ListThunk<S> r) {
        return s.mkChoice(s.mkCons(x, s.mkCons(h, t)), s.mkCons(h, r()));
    };
    return s.mkRecur(std::move(body), s.mkCons(x, s.mkNil()), std::move(l));
}

// All permutations: fold insert over the input.
template <Semantics S>
typename S::ListRep permNd(S& s, typename S::ListRep l) {
    return foldrNd(
        s, [&s](typename S::IntRep h, typename S::ListRep acc) { return insertNd(s, h, acc); },
        s.mkNil(), std::move(l));
}

// Sorting as "commit to one sorted permutation".  Sorted is non-increasing.
template <Semantics S>
typename S::ListRep sortNd(S& s, typename S::ListRep l) {
    return s.mkOnce(s.mkRId(Pred::sorted(), permNd(s, std::move(l))));
}

}  // namespace ndet
