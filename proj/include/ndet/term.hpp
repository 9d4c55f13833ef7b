#pragma once

#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ndet/core.hpp"

namespace ndet {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Two sorts of terms. Int-sort: IntLit, BoundH. Everything else is
// list-sort. BoundH/BoundT/BoundR are the three names available inside
// a recur body: the head, the tail, and the invocation of the
// recursion thunk.

struct IntLit {
    int value = 0;
};
struct BoundH {};

struct Nil {};
struct Cons {
    TermPtr head;  // int-sort
    TermPtr tail;  // list-sort
};
struct ListLit {
    std::vector<int> values;
};
struct Fail {};
struct Choice {
    TermPtr left;
    TermPtr right;
};
struct Recur {
    TermPtr body;  // list-sort, may use the bound names
    TermPtr z;     // list-sort, closed
    TermPtr l;     // list-sort, closed
};
struct RId {
    Pred pred;
    TermPtr arg;
};
struct Once {
    TermPtr arg;
};
struct BoundT {};
struct BoundR {};

struct Term {
    using Node = std::variant<IntLit, BoundH, Nil, Cons, ListLit, Fail, Choice, Recur, RId, Once,
                              BoundT, BoundR>;
    Node node;
};

enum class Sort { Int, List };

Sort sortOf(const Term& t);

bool termEq(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return termEq(a, b); }

// Construction helpers. Terms are immutable and freely shared.
TermPtr tInt(int v);
TermPtr tBoundH();
TermPtr tNil();
TermPtr tCons(TermPtr head, TermPtr tail);
TermPtr tList(std::vector<int> values);
TermPtr tFail();
TermPtr tChoice(TermPtr left, TermPtr right);
TermPtr tRecur(TermPtr body, TermPtr z, TermPtr l);
TermPtr tRId(Pred pred, TermPtr arg);
TermPtr tOnce(TermPtr arg);
TermPtr tBoundT();
TermPtr tBoundR();

/// Validates sort-correctness and scoping: bound names appear only inside
/// recur bodies, and the z/l of any recur (nested ones included) are
/// closed. Throws SortError.
void checkTerm(const Term& t);

/// Substitutes the three bound names of a recur body with closed terms.
/// Nested recur bodies keep their own scope and are left untouched.
TermPtr substBody(const Term& body, const TermPtr& h, const TermPtr& t, const TermPtr& r);

/// The nondeterministic insertion of x into the literal list xs,
/// reified: recur (fun (h,t) r -> cons x (cons h t) ||| cons h (r()))
/// (cons x nil) (list xs).
TermPtr insertTerm(int x, std::span<const int> xs);

std::string printTerm(const Term& t);
TermPtr parseTerm(std::string_view text);

}  // namespace ndet
