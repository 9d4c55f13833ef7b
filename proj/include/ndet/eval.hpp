#pragma once

#include <optional>

#include "ndet/semantics.hpp"
#include "ndet/term.hpp"

namespace ndet {

namespace detail {

// Bindings in force while evaluating a recursor body: the head, the tail,
// and the thunked recursive result.  Empty outside of bodies.
template <Semantics S>
struct Scope {
    std::optional<typename S::IntRep> h;
    std::optional<typename S::ListRep> t;
    ListThunk<S> r;
};

template <Semantics S>
typename S::ListRep evalList(S& s, const Term& term, const Scope<S>& scope);

template <Semantics S>
typename S::IntRep evalInt(S& s, const Term& term, const Scope<S>& scope) {
    if (const auto* lit = std::get_if<IntLit>(&term.node)) return s.mkInt(lit->value);
    if (std::holds_alternative<BoundH>(term.node)) {
        if (!scope.h) throw InternalError("evaluating 'h' outside a recursor body");
        return *scope.h;
    }
    throw InternalError("evaluating a list-sort term where an int was expected");
}

template <Semantics S>
typename S::ListRep evalList(S& s, const Term& term, const Scope<S>& scope) {
    return std::visit(
        [&](const auto& n) -> typename S::ListRep {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Nil>) {
                return s.mkNil();
            } else if constexpr (std::is_same_v<T, Cons>) {
                return s.mkCons(evalInt(s, *n.head, scope), evalList(s, *n.tail, scope));
            } else if constexpr (std::is_same_v<T, ListLit>) {
                return s.mkList(n.values);
            } else if constexpr (std::is_same_v<T, Fail>) {
                return s.mkFail();
            } else if constexpr (std::is_same_v<T, Choice>) {
                return s.mkChoice(evalList(s, *n.left, scope), evalList(s, *n.right, scope));
            } else if constexpr (std::is_same_v<T, Recur>) {
                TermPtr bodyTerm = n.body;
                RecurBody<S> body = [&s, bodyTerm](typename S::IntRep h, typename S::ListRep t,
                                                   ListThunk<S> r) {
                    Scope<S> inner{std::move(h), std::move(t), std::move(r)};
                    return evalList(s, *bodyTerm, inner);
                };
                // z and l are closed: evaluate them in the empty scope.
                Scope<S> empty;
                return s.mkRecur(std::move(body), evalList(s, *n.z, empty),
                                 evalList(s, *n.l, empty));
            } else if constexpr (std::is_same_v<T, RId>) {
                return s.mkRId(n.pred, evalList(s, *n.arg, scope));
            } else if constexpr (std::is_same_v<T, Once>) {
                return s.mkOnce(evalList(s, *n.arg, scope));
            } else if constexpr (std::is_same_v<T, BoundT>) {
                if (!scope.t) throw InternalError("evaluating 't' outside a recursor body");
                return *scope.t;
            } else if constexpr (std::is_same_v<T, BoundR>) {
                if (!scope.r) throw InternalError("evaluating '(r)' outside a recursor body");
                return scope.r();
            } else {
                throw InternalError("evaluating an int-sort term where a list was expected");
            }
        },
        term.node);
}

}  // namespace detail

// Interprets a closed list-sort term with the given backend.
template <Semantics S>
typename S::ListRep evalWith(S& s, const Term& term) {
    if (sortOf(term) != Sort::List) throw SortError("evalWith needs a list-sort term");
    checkTerm(term);
    detail::Scope<S> empty;
    return detail::evalList(s, term, empty);
}

}  // namespace ndet
