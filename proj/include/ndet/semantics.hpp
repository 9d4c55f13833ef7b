#pragma once

#include <concepts>
#include <functional>
#include <span>

#include "ndet/core.hpp"

namespace ndet {

// A backend gives meaning to the list language by choosing carrier types for
// the two sorts and implementing one operation per syntactic form.  Programs
// are written against this interface (directly, or via the Term evaluator),
// so the same program can be run, analyzed, or compiled by swapping backends.

template <typename S>
using ListThunk = std::function<typename S::ListRep()>;

// The recursor body receives the head, the tail, and the recursive result on
// the tail as a thunk, so backends decide whether/when recursion happens.
template <typename S>
using RecurBody =
    std::function<typename S::ListRep(typename S::IntRep, typename S::ListRep, ListThunk<S>)>;

template <typename S>
concept Semantics =
    std::copyable<typename S::IntRep> && std::copyable<typename S::ListRep> &&
    requires(S s, int n, typename S::IntRep i, typename S::ListRep l, RecurBody<S> body,
             std::span<const int> xs, Pred p) {
        { s.mkInt(n) } -> std::same_as<typename S::IntRep>;
        { s.mkNil() } -> std::same_as<typename S::ListRep>;
        { s.mkCons(i, l) } -> std::same_as<typename S::ListRep>;
        { s.mkList(xs) } -> std::same_as<typename S::ListRep>;
        { s.mkFail() } -> std::same_as<typename S::ListRep>;
        { s.mkChoice(l, l) } -> std::same_as<typename S::ListRep>;
        { s.mkRecur(body, l, l) } -> std::same_as<typename S::ListRep>;
        { s.mkRId(p, l) } -> std::same_as<typename S::ListRep>;
        { s.mkOnce(l) } -> std::same_as<typename S::ListRep>;
    };

// Backends whose list carrier can be observed as the bag of alternatives.
template <typename S>
concept ObservableSemantics = Semantics<S> && requires(S s, typename S::ListRep l) {
    { s.runObs(l) } -> std::same_as<ChoiceBag>;
};

}  // namespace ndet
