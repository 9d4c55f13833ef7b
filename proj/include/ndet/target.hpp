#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ndet/core.hpp"

namespace ndet::target {

// The first-order language the compiler emits.  Three value sorts: integers,
// integer lists, and lists of integer lists (bags of alternatives); a whole
// program denotes a bag.

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLitE {
    int value;
};
struct VarE {
    std::string name;
};
struct NilE {};
// Cons at either list sort: int onto a list, or a list onto a bag.
struct ConsE {
    ExprPtr head, tail;
};
struct ListLitE {
    std::vector<int> values;
};
struct AppendE {
    ExprPtr left, right;
};
// map (fun alt -> head :: alt) lists — prefixing one element onto every
// alternative of a bag.
struct MapConsE {
    ExprPtr head;
    ExprPtr lists;
};
// List.concat (List.map (fun param -> body) list)
struct ConcatMapE {
    std::string param;
    ExprPtr body;
    ExprPtr list;
};
struct LetE {
    std::string name;
    ExprPtr bound;
    ExprPtr body;
};
// let rec fname = function [] -> nilBranch | headName::tailName -> consBranch
// in fname arg.  Within consBranch, `fname` names the recursive result on
// tailName (the recursor's value on the tail), keeping the language
// first-order: there is no way to apply fname to anything else.
struct LetRecMatchE {
    std::string fname;
    std::string param;  // the list being matched; bound in both branches
    ExprPtr nilBranch;
    std::string headName, tailName;
    ExprPtr consBranch;
    ExprPtr arg;
};
struct FilterE {
    Pred pred;
    ExprPtr arg;
};
struct TakeFirstE {
    ExprPtr arg;
};

struct Expr {
    using Node = std::variant<IntLitE, VarE, NilE, ConsE, ListLitE, AppendE, MapConsE, ConcatMapE,
                              LetE, LetRecMatchE, FilterE, TakeFirstE>;
    Node node;
};

ExprPtr eInt(int v);
ExprPtr eVar(std::string name);
ExprPtr eNil();
ExprPtr eCons(ExprPtr head, ExprPtr tail);
ExprPtr eListLit(std::vector<int> values);
ExprPtr eAppend(ExprPtr left, ExprPtr right);
ExprPtr eMapCons(ExprPtr head, ExprPtr lists);
ExprPtr eConcatMap(std::string param, ExprPtr body, ExprPtr list);
ExprPtr eLet(std::string name, ExprPtr bound, ExprPtr body);
ExprPtr eLetRecMatch(std::string fname, std::string param, ExprPtr nilBranch, std::string headName,
                     std::string tailName, ExprPtr consBranch, ExprPtr arg);
ExprPtr eFilter(Pred pred, ExprPtr arg);
ExprPtr eTakeFirst(ExprPtr arg);

bool exprEq(const Expr& a, const Expr& b);

// Canonical S-expression text (single program, single spaces).
std::string toText(const Expr& e);
ExprPtr parseProgram(std::string_view text);

// Throws ScopeError on an unbound variable or a shadowing binder.
void checkScopes(const Expr& e);

// Count of nodes matching a shape, for structural assertions on emitted code.
template <typename NodeT>
std::size_t countNodes(const Expr& e);

// Runs a well-scoped program denoting a bag of integer lists.
ChoiceBag exec(const Expr& e);

namespace detail {
void collectChildren(const Expr& e, std::vector<const Expr*>& out);
}

template <typename NodeT>
std::size_t countNodes(const Expr& e) {
    std::size_t count = std::holds_alternative<NodeT>(e.node) ? 1 : 0;
    std::vector<const Expr*> children;
    detail::collectChildren(e, children);
    for (const Expr* c : children) count += countNodes<NodeT>(*c);
    return count;
}

}  // namespace ndet::target
