#include "ndet/term.hpp"

#include <utility>

namespace ndet {

namespace {

template <class NodeT>
TermPtr make(NodeT node) {
    return std::make_shared<const Term>(Term{Term::Node{std::move(node)}});
}

}  // namespace

Sort sortOf(const Term& t) {
    if (std::holds_alternative<IntLit>(t.node) || std::holds_alternative<BoundH>(t.node)) {
        return Sort::Int;
    }
    return Sort::List;
}

TermPtr tInt(int v) { return make(IntLit{v}); }
TermPtr tBoundH() { return make(BoundH{}); }
TermPtr tNil() { return make(Nil{}); }
TermPtr tCons(TermPtr head, TermPtr tail) { return make(Cons{std::move(head), std::move(tail)}); }
TermPtr tList(std::vector<int> values) { return make(ListLit{std::move(values)}); }
TermPtr tFail() { return make(Fail{}); }
TermPtr tChoice(TermPtr left, TermPtr right) {
    return make(Choice{std::move(left), std::move(right)});
}
TermPtr tRecur(TermPtr body, TermPtr z, TermPtr l) {
    return make(Recur{std::move(body), std::move(z), std::move(l)});
}
TermPtr tRId(Pred pred, TermPtr arg) { return make(RId{pred, std::move(arg)}); }
TermPtr tOnce(TermPtr arg) { return make(Once{std::move(arg)}); }
TermPtr tBoundT() { return make(BoundT{}); }
TermPtr tBoundR() { return make(BoundR{}); }

bool termEq(const Term& a, const Term& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&b](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLit>) {
                return na.value == nb.value;
            } else if constexpr (std::is_same_v<T, Cons>) {
                return termEq(*na.head, *nb.head) && termEq(*na.tail, *nb.tail);
            } else if constexpr (std::is_same_v<T, ListLit>) {
                return na.values == nb.values;
            } else if constexpr (std::is_same_v<T, Choice>) {
                return termEq(*na.left, *nb.left) && termEq(*na.right, *nb.right);
            } else if constexpr (std::is_same_v<T, Recur>) {
                return termEq(*na.body, *nb.body) && termEq(*na.z, *nb.z) && termEq(*na.l, *nb.l);
            } else if constexpr (std::is_same_v<T, RId>) {
                return na.pred == nb.pred && termEq(*na.arg, *nb.arg);
            } else if constexpr (std::is_same_v<T, Once>) {
                return termEq(*na.arg, *nb.arg);
            } else {
                return true;  // leaf tags carry no payload
            }
        },
        a.node);
}

namespace {

void check(const Term& t, Sort expected, bool inBody) {
    if (sortOf(t) != expected) {
        throw SortError(expected == Sort::Int ? "expected an int-sort term"
                                              : "expected a list-sort term");
    }
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BoundH> || std::is_same_v<T, BoundT> ||
                          std::is_same_v<T, BoundR>) {
                if (!inBody) throw SortError("bound name outside a recur body");
            } else if constexpr (std::is_same_v<T, Cons>) {
                check(*n.head, Sort::Int, inBody);
                check(*n.tail, Sort::List, inBody);
            } else if constexpr (std::is_same_v<T, Choice>) {
                check(*n.left, Sort::List, inBody);
                check(*n.right, Sort::List, inBody);
            } else if constexpr (std::is_same_v<T, Recur>) {
                check(*n.body, Sort::List, true);
                // z and l must be closed even when the recur sits inside
                // an enclosing body.
                check(*n.z, Sort::List, false);
                check(*n.l, Sort::List, false);
            } else if constexpr (std::is_same_v<T, RId>) {
                check(*n.arg, Sort::List, inBody);
            } else if constexpr (std::is_same_v<T, Once>) {
                check(*n.arg, Sort::List, inBody);
            }
        },
        t.node);
}

}  // namespace

void checkTerm(const Term& t) { check(t, sortOf(t), false); }

namespace {

TermPtr substNode(const Term& t, const TermPtr& h, const TermPtr& tl, const TermPtr& r) {
    return std::visit(
        [&](const auto& n) -> TermPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BoundH>) {
                return h;
            } else if constexpr (std::is_same_v<T, BoundT>) {
                return tl;
            } else if constexpr (std::is_same_v<T, BoundR>) {
                return r;
            } else if constexpr (std::is_same_v<T, Cons>) {
                return tCons(substNode(*n.head, h, tl, r), substNode(*n.tail, h, tl, r));
            } else if constexpr (std::is_same_v<T, Choice>) {
                return tChoice(substNode(*n.left, h, tl, r), substNode(*n.right, h, tl, r));
            } else if constexpr (std::is_same_v<T, Recur>) {
                // The nested body rebinds all three names; z/l are closed.
                return tRecur(n.body, n.z, n.l);
            } else if constexpr (std::is_same_v<T, RId>) {
                return tRId(n.pred, substNode(*n.arg, h, tl, r));
            } else if constexpr (std::is_same_v<T, Once>) {
                return tOnce(substNode(*n.arg, h, tl, r));
            } else {
                return std::make_shared<const Term>(Term{Term::Node{n}});
            }
        },
        t.node);
}

}  // namespace

TermPtr substBody(const Term& body, const TermPtr& h, const TermPtr& t, const TermPtr& r) {
    return substNode(body, h, t, r);
}

TermPtr insertTerm(int x, std::span<const int> xs) {
    TermPtr body = tChoice(tCons(tInt(x), tCons(tBoundH(), tBoundT())),
                           tCons(tBoundH(), tBoundR()));
    return tRecur(std::move(body), tCons(tInt(x), tNil()),
                  tList(std::vector<int>(xs.begin(), xs.end())));
}

}  // namespace ndet
