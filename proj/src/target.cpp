#include "ndet/target.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "ndet/sexp.hpp"
#include "ndet/sexp_util.hpp"

namespace ndet::target {

namespace {

template <typename NodeT>
ExprPtr make(NodeT&& n) {
    return std::make_shared<const Expr>(Expr{Expr::Node{std::forward<NodeT>(n)}});
}

}  // namespace

ExprPtr eInt(int v) { return make(IntLitE{v}); }
ExprPtr eVar(std::string name) { return make(VarE{std::move(name)}); }
ExprPtr eNil() { return make(NilE{}); }
ExprPtr eCons(ExprPtr head, ExprPtr tail) { return make(ConsE{std::move(head), std::move(tail)}); }
ExprPtr eListLit(std::vector<int> values) { return make(ListLitE{std::move(values)}); }
ExprPtr eAppend(ExprPtr left, ExprPtr right) {
    return make(AppendE{std::move(left), std::move(right)});
}
ExprPtr eMapCons(ExprPtr head, ExprPtr lists) {
    return make(MapConsE{std::move(head), std::move(lists)});
}
ExprPtr eConcatMap(std::string param, ExprPtr body, ExprPtr list) {
    return make(ConcatMapE{std::move(param), std::move(body), std::move(list)});
}
ExprPtr eLet(std::string name, ExprPtr bound, ExprPtr body) {
    return make(LetE{std::move(name), std::move(bound), std::move(body)});
}
ExprPtr eLetRecMatch(std::string fname, std::string param, ExprPtr nilBranch, std::string headName,
                     std::string tailName, ExprPtr consBranch, ExprPtr arg) {
    return make(LetRecMatchE{std::move(fname), std::move(param), std::move(nilBranch),
                             std::move(headName), std::move(tailName), std::move(consBranch),
                             std::move(arg)});
}
ExprPtr eFilter(Pred pred, ExprPtr arg) { return make(FilterE{pred, std::move(arg)}); }
ExprPtr eTakeFirst(ExprPtr arg) { return make(TakeFirstE{std::move(arg)}); }

namespace detail {

void collectChildren(const Expr& e, std::vector<const Expr*>& out) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ConsE>) {
                out.push_back(n.head.get());
                out.push_back(n.tail.get());
            } else if constexpr (std::is_same_v<T, AppendE>) {
                out.push_back(n.left.get());
                out.push_back(n.right.get());
            } else if constexpr (std::is_same_v<T, MapConsE>) {
                out.push_back(n.head.get());
                out.push_back(n.lists.get());
            } else if constexpr (std::is_same_v<T, ConcatMapE>) {
                out.push_back(n.body.get());
                out.push_back(n.list.get());
            } else if constexpr (std::is_same_v<T, LetE>) {
                out.push_back(n.bound.get());
                out.push_back(n.body.get());
            } else if constexpr (std::is_same_v<T, LetRecMatchE>) {
                out.push_back(n.nilBranch.get());
                out.push_back(n.consBranch.get());
                out.push_back(n.arg.get());
            } else if constexpr (std::is_same_v<T, FilterE> || std::is_same_v<T, TakeFirstE>) {
                out.push_back(n.arg.get());
            }
        },
        e.node);
}

}  // namespace detail

bool exprEq(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, IntLitE>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, VarE>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, NilE>) {
                return true;
            } else if constexpr (std::is_same_v<T, ConsE>) {
                return exprEq(*x.head, *y.head) && exprEq(*x.tail, *y.tail);
            } else if constexpr (std::is_same_v<T, ListLitE>) {
                return x.values == y.values;
            } else if constexpr (std::is_same_v<T, AppendE>) {
                return exprEq(*x.left, *y.left) && exprEq(*x.right, *y.right);
            } else if constexpr (std::is_same_v<T, MapConsE>) {
                return exprEq(*x.head, *y.head) && exprEq(*x.lists, *y.lists);
            } else if constexpr (std::is_same_v<T, ConcatMapE>) {
                return x.param == y.param && exprEq(*x.body, *y.body) && exprEq(*x.list, *y.list);
            } else if constexpr (std::is_same_v<T, LetE>) {
                return x.name == y.name && exprEq(*x.bound, *y.bound) && exprEq(*x.body, *y.body);
            } else if constexpr (std::is_same_v<T, LetRecMatchE>) {
                return x.fname == y.fname && x.param == y.param && x.headName == y.headName &&
                       x.tailName == y.tailName && exprEq(*x.nilBranch, *y.nilBranch) &&
                       exprEq(*x.consBranch, *y.consBranch) && exprEq(*x.arg, *y.arg);
            } else if constexpr (std::is_same_v<T, FilterE>) {
                return x.pred == y.pred && exprEq(*x.arg, *y.arg);
            } else {
                static_assert(std::is_same_v<T, TakeFirstE>);
                return exprEq(*x.arg, *y.arg);
            }
        },
        a.node);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void print(const Expr& e, std::ostream& os) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLitE>) {
                os << "(intlit " << n.value << ")";
            } else if constexpr (std::is_same_v<T, VarE>) {
                os << "(var " << n.name << ")";
            } else if constexpr (std::is_same_v<T, NilE>) {
                os << "(nil)";
            } else if constexpr (std::is_same_v<T, ConsE>) {
                os << "(cons ";
                print(*n.head, os);
                os << " ";
                print(*n.tail, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, ListLitE>) {
                os << "(listlit";
                for (int v : n.values) os << " " << v;
                os << ")";
            } else if constexpr (std::is_same_v<T, AppendE>) {
                os << "(append ";
                print(*n.left, os);
                os << " ";
                print(*n.right, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, MapConsE>) {
                os << "(mapcons ";
                print(*n.head, os);
                os << " ";
                print(*n.lists, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, ConcatMapE>) {
                os << "(concatmap " << n.param << " ";
                print(*n.body, os);
                os << " ";
                print(*n.list, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, LetE>) {
                os << "(let " << n.name << " ";
                print(*n.bound, os);
                os << " ";
                print(*n.body, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, LetRecMatchE>) {
                os << "(letrecmatch " << n.fname << " " << n.param << " ";
                print(*n.nilBranch, os);
                os << " (" << n.headName << " " << n.tailName << " ";
                print(*n.consBranch, os);
                os << ") ";
                print(*n.arg, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, FilterE>) {
                os << "(filter " << predToText(n.pred) << " ";
                print(*n.arg, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, TakeFirstE>) {
                os << "(takefirst ";
                print(*n.arg, os);
                os << ")";
            }
        },
        e.node);
}

}  // namespace

std::string toText(const Expr& e) {
    std::ostringstream os;
    print(e, os);
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using sexpio::arg;
using sexpio::fail;
using sexpio::parseInt;
using sexpio::parsePred;

std::string parseName(const sexp::Node& node) {
    if (!node.isAtom || node.atom.empty()) fail(node, "expected a name");
    char c0 = node.atom[0];
    if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_')) {
        fail(node, "invalid name '" + node.atom + "'");
    }
    for (char c : node.atom) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            fail(node, "invalid name '" + node.atom + "'");
        }
    }
    return node.atom;
}

ExprPtr parseExpr(const sexp::Node& node) {
    if (node.isAtom) fail(node, "expected an expression, got '" + node.atom + "'");
    if (node.items.empty() || !node.items[0].isAtom) fail(node, "expected an expression");
    const std::string& head = node.items[0].atom;
    if (head == "intlit") return eInt(parseInt(arg(node, 0, 1)));
    if (head == "var") return eVar(parseName(arg(node, 0, 1)));
    if (head == "nil") {
        arg(node, 0, 0);
        return eNil();
    }
    if (head == "cons") return eCons(parseExpr(arg(node, 0, 2)), parseExpr(arg(node, 1, 2)));
    if (head == "listlit") {
        std::vector<int> values;
        for (std::size_t i = 1; i < node.items.size(); i++) values.push_back(parseInt(node.items[i]));
        return eListLit(std::move(values));
    }
    if (head == "append") return eAppend(parseExpr(arg(node, 0, 2)), parseExpr(arg(node, 1, 2)));
    if (head == "mapcons") return eMapCons(parseExpr(arg(node, 0, 2)), parseExpr(arg(node, 1, 2)));
    if (head == "concatmap") {
        return eConcatMap(parseName(arg(node, 0, 3)), parseExpr(arg(node, 1, 3)),
                          parseExpr(arg(node, 2, 3)));
    }
    if (head == "let") {
        return eLet(parseName(arg(node, 0, 3)), parseExpr(arg(node, 1, 3)),
                    parseExpr(arg(node, 2, 3)));
    }
    if (head == "letrecmatch") {
        const sexp::Node& consClause = arg(node, 3, 5);
        if (consClause.isAtom || consClause.items.size() != 3) {
            fail(consClause, "expected a cons clause (H T E)");
        }
        return eLetRecMatch(parseName(arg(node, 0, 5)), parseName(arg(node, 1, 5)),
                            parseExpr(arg(node, 2, 5)), parseName(consClause.items[0]),
                            parseName(consClause.items[1]), parseExpr(consClause.items[2]),
                            parseExpr(arg(node, 4, 5)));
    }
    if (head == "filter") return eFilter(parsePred(arg(node, 0, 2)), parseExpr(arg(node, 1, 2)));
    if (head == "takefirst") return eTakeFirst(parseExpr(arg(node, 0, 1)));
    fail(node, "unknown form '" + head + "'");
}

}  // namespace

ExprPtr parseProgram(std::string_view text) { return parseExpr(sexp::parseOne(text)); }

// ---------------------------------------------------------------------------
// Scope checking

namespace {

void checkScopesIn(const Expr& e, std::vector<std::string>& bound) {
    auto isBound = [&](const std::string& name) {
        for (const auto& b : bound) {
            if (b == name) return true;
        }
        return false;
    };
    auto bind = [&](const std::string& name) {
        if (isBound(name)) throw ScopeError("binder '" + name + "' shadows an existing binding");
        bound.push_back(name);
    };
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, VarE>) {
                if (!isBound(n.name)) throw ScopeError("unbound variable '" + n.name + "'");
            } else if constexpr (std::is_same_v<T, ConcatMapE>) {
                checkScopesIn(*n.list, bound);
                bind(n.param);
                checkScopesIn(*n.body, bound);
                bound.pop_back();
            } else if constexpr (std::is_same_v<T, LetE>) {
                checkScopesIn(*n.bound, bound);
                bind(n.name);
                checkScopesIn(*n.body, bound);
                bound.pop_back();
            } else if constexpr (std::is_same_v<T, LetRecMatchE>) {
                checkScopesIn(*n.arg, bound);
                bind(n.fname);
                bind(n.param);
                checkScopesIn(*n.nilBranch, bound);
                bind(n.headName);
                bind(n.tailName);
                checkScopesIn(*n.consBranch, bound);
                bound.pop_back();
                bound.pop_back();
                bound.pop_back();
                bound.pop_back();
            } else {
                std::vector<const Expr*> children;
                detail::collectChildren(e, children);
                for (const Expr* c : children) checkScopesIn(*c, bound);
            }
        },
        e.node);
}

}  // namespace

void checkScopes(const Expr& e) {
    std::vector<std::string> bound;
    checkScopesIn(e, bound);
}

// ---------------------------------------------------------------------------
// Interpreter

namespace {

struct Value {
    std::variant<int, std::vector<Value>> v;

    bool isInt() const { return v.index() == 0; }
    int asInt() const { return std::get<0>(v); }
    const std::vector<Value>& asSeq() const { return std::get<1>(v); }
};

// A recursive-result binding, forced at most once.
struct LazySlot {
    std::function<Value()> compute;
    std::optional<Value> cached;

    const Value& force() {
        if (!cached) cached = compute();
        return *cached;
    }
};

// Bindings are looked up by name; recursive results are lazy slots so a cons
// branch that never consults the recursion pays nothing for it.
struct Env {
    std::map<std::string, Value> values;
    std::map<std::string, std::shared_ptr<LazySlot>> lazies;
};

[[noreturn]] void execBug(const std::string& msg) {
    throw InternalError("target interpreter: " + msg);
}

Value eval(const Expr& e, const Env& env);

std::vector<int> asIntList(const Value& v, const char* what) {
    if (v.isInt()) execBug(std::string(what) + " is an integer, expected a list");
    std::vector<int> out;
    out.reserve(v.asSeq().size());
    for (const Value& e : v.asSeq()) {
        if (!e.isInt()) execBug(std::string(what) + " has a non-integer element");
        out.push_back(e.asInt());
    }
    return out;
}

Value evalRec(const LetRecMatchE& n, const std::vector<Value>& xs, const Env& env) {
    Env inner = env;
    inner.values[n.param] = Value{xs};
    if (xs.empty()) return eval(*n.nilBranch, inner);

    std::vector<Value> tail(xs.begin() + 1, xs.end());
    inner.values[n.headName] = xs.front();
    inner.values[n.tailName] = Value{tail};
    auto slot = std::make_shared<LazySlot>();
    slot->compute = [&n, tail, env] { return evalRec(n, tail, env); };
    inner.lazies[n.fname] = slot;
    return eval(*n.consBranch, inner);
}

Value eval(const Expr& e, const Env& env) {
    return std::visit(
        [&](const auto& n) -> Value {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLitE>) {
                return Value{n.value};
            } else if constexpr (std::is_same_v<T, VarE>) {
                if (auto it = env.values.find(n.name); it != env.values.end()) return it->second;
                if (auto it = env.lazies.find(n.name); it != env.lazies.end()) {
                    return it->second->force();
                }
                execBug("unbound variable '" + n.name + "'");
            } else if constexpr (std::is_same_v<T, NilE>) {
                return Value{std::vector<Value>{}};
            } else if constexpr (std::is_same_v<T, ConsE>) {
                Value h = eval(*n.head, env);
                Value t = eval(*n.tail, env);
                if (t.isInt()) execBug("cons onto an integer");
                std::vector<Value> out;
                out.reserve(t.asSeq().size() + 1);
                out.push_back(std::move(h));
                out.insert(out.end(), t.asSeq().begin(), t.asSeq().end());
                return Value{std::move(out)};
            } else if constexpr (std::is_same_v<T, ListLitE>) {
                std::vector<Value> out;
                out.reserve(n.values.size());
                for (int v : n.values) out.push_back(Value{v});
                return Value{std::move(out)};
            } else if constexpr (std::is_same_v<T, AppendE>) {
                Value l = eval(*n.left, env);
                Value r = eval(*n.right, env);
                if (l.isInt() || r.isInt()) execBug("append of an integer");
                std::vector<Value> out = l.asSeq();
                out.insert(out.end(), r.asSeq().begin(), r.asSeq().end());
                return Value{std::move(out)};
            } else if constexpr (std::is_same_v<T, MapConsE>) {
                Value h = eval(*n.head, env);
                Value ls = eval(*n.lists, env);
                if (ls.isInt()) execBug("mapcons over an integer");
                std::vector<Value> out;
                out.reserve(ls.asSeq().size());
                for (const Value& alt : ls.asSeq()) {
                    if (alt.isInt()) execBug("mapcons alternative is an integer");
                    std::vector<Value> item;
                    item.reserve(alt.asSeq().size() + 1);
                    item.push_back(h);
                    item.insert(item.end(), alt.asSeq().begin(), alt.asSeq().end());
                    out.push_back(Value{std::move(item)});
                }
                return Value{std::move(out)};
            } else if constexpr (std::is_same_v<T, ConcatMapE>) {
                Value l = eval(*n.list, env);
                if (l.isInt()) execBug("concatmap over an integer");
                std::vector<Value> out;
                Env inner = env;
                for (const Value& item : l.asSeq()) {
                    inner.values[n.param] = item;
                    Value piece = eval(*n.body, inner);
                    if (piece.isInt()) execBug("concatmap body produced an integer");
                    out.insert(out.end(), piece.asSeq().begin(), piece.asSeq().end());
                }
                return Value{std::move(out)};
            } else if constexpr (std::is_same_v<T, LetE>) {
                Env inner = env;
                inner.values[n.name] = eval(*n.bound, env);
                return eval(*n.body, inner);
            } else if constexpr (std::is_same_v<T, LetRecMatchE>) {
                Value argv = eval(*n.arg, env);
                if (argv.isInt()) execBug("letrecmatch argument is an integer");
                return evalRec(n, argv.asSeq(), env);
            } else if constexpr (std::is_same_v<T, FilterE>) {
                Value l = eval(*n.arg, env);
                if (l.isInt()) execBug("filter over an integer");
                std::vector<Value> out;
                for (const Value& alt : l.asSeq()) {
                    if (holds(n.pred, asIntList(alt, "filter alternative"))) out.push_back(alt);
                }
                return Value{std::move(out)};
            } else {
                static_assert(std::is_same_v<T, TakeFirstE>);
                Value l = eval(*n.arg, env);
                if (l.isInt()) execBug("takefirst over an integer");
                if (l.asSeq().empty()) return Value{std::vector<Value>{}};
                return Value{std::vector<Value>{l.asSeq().front()}};
            }
        },
        e.node);
}

}  // namespace

ChoiceBag exec(const Expr& e) {
    checkScopes(e);
    Env env;
    Value v = eval(e, env);
    if (v.isInt()) execBug("program denotes an integer, expected a bag of lists");
    ChoiceBag out;
    out.reserve(v.asSeq().size());
    for (const Value& alt : v.asSeq()) out.push_back(asIntList(alt, "program alternative"));
    return out;
}

}  // namespace ndet::target
