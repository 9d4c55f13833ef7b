#include <sstream>

#include "ndet/sexp.hpp"
#include "ndet/sexp_util.hpp"
#include "ndet/term.hpp"

namespace ndet {

namespace {

void print(const Term& t, std::ostream& os) {
    std::visit(
        [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, IntLit>) {
                os << "(int " << n.value << ")";
            } else if constexpr (std::is_same_v<T, BoundH>) {
                os << "h";
            } else if constexpr (std::is_same_v<T, Nil>) {
                os << "(nil)";
            } else if constexpr (std::is_same_v<T, Cons>) {
                os << "(cons ";
                print(*n.head, os);
                os << " ";
                print(*n.tail, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, ListLit>) {
                os << "(list";
                for (int v : n.values) os << " " << v;
                os << ")";
            } else if constexpr (std::is_same_v<T, Fail>) {
                os << "(fail)";
            } else if constexpr (std::is_same_v<T, Choice>) {
                os << "(choice ";
                print(*n.left, os);
                os << " ";
                print(*n.right, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, Recur>) {
                os << "(recur ";
                print(*n.body, os);
                os << " ";
                print(*n.z, os);
                os << " ";
                print(*n.l, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, RId>) {
                os << "(rid " << predToText(n.pred) << " ";
                print(*n.arg, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, Once>) {
                os << "(once ";
                print(*n.arg, os);
                os << ")";
            } else if constexpr (std::is_same_v<T, BoundT>) {
                os << "t";
            } else if constexpr (std::is_same_v<T, BoundR>) {
                os << "(r)";
            }
        },
        t.node);
}

using sexpio::arg;
using sexpio::fail;
using sexpio::parseInt;
using sexpio::parsePred;

TermPtr parseList(const sexp::Node& node, bool inBody);

TermPtr parseIntSort(const sexp::Node& node, bool inBody) {
    if (node.isAtom) {
        if (node.atom == "h") {
            if (!inBody) fail(node, "'h' is only valid inside a recur body");
            return tBoundH();
        }
        fail(node, "expected an int-sort term, got '" + node.atom + "'");
    }
    if (node.items.empty() || !node.items[0].isAtom) fail(node, "expected an int-sort term");
    const std::string& head = node.items[0].atom;
    if (head == "int") return tInt(parseInt(arg(node, 0, 1)));
    fail(node, "expected an int-sort term, got '(" + head + " ...)'");
}

TermPtr parseList(const sexp::Node& node, bool inBody) {
    if (node.isAtom) {
        if (node.atom == "t") {
            if (!inBody) fail(node, "'t' is only valid inside a recur body");
            return tBoundT();
        }
        if (node.atom == "h") fail(node, "'h' is an int-sort term; expected list-sort");
        fail(node, "expected a list-sort term, got '" + node.atom + "'");
    }
    if (node.items.empty() || !node.items[0].isAtom) fail(node, "expected a list-sort term");
    const std::string& head = node.items[0].atom;
    if (head == "nil") {
        arg(node, 0, 0);
        return tNil();
    }
    if (head == "fail") {
        arg(node, 0, 0);
        return tFail();
    }
    if (head == "r") {
        arg(node, 0, 0);
        if (!inBody) fail(node, "'(r)' is only valid inside a recur body");
        return tBoundR();
    }
    if (head == "cons") {
        return tCons(parseIntSort(arg(node, 0, 2), inBody), parseList(arg(node, 1, 2), inBody));
    }
    if (head == "list") {
        std::vector<int> values;
        for (std::size_t i = 1; i < node.items.size(); i++) values.push_back(parseInt(node.items[i]));
        return tList(std::move(values));
    }
    if (head == "choice") {
        return tChoice(parseList(arg(node, 0, 2), inBody), parseList(arg(node, 1, 2), inBody));
    }
    if (head == "recur") {
        // z and l are closed regardless of the enclosing scope.
        return tRecur(parseList(arg(node, 0, 3), true), parseList(arg(node, 1, 3), false),
                      parseList(arg(node, 2, 3), false));
    }
    if (head == "rid") {
        return tRId(parsePred(arg(node, 0, 2)), parseList(arg(node, 1, 2), inBody));
    }
    if (head == "once") {
        return tOnce(parseList(arg(node, 0, 1), inBody));
    }
    fail(node, "unknown term form '" + head + "'");
}

}  // namespace

std::string printTerm(const Term& t) {
    std::ostringstream os;
    print(t, os);
    return os.str();
}

TermPtr parseTerm(std::string_view text) {
    sexp::Node root = sexp::parseOne(text);
    if (root.isList() && !root.items.empty() && root.items[0].isAtom &&
        root.items[0].atom == "int") {
        throw ParseError("a term must be list-sort; '(int ...)' only occurs inside cons",
                         root.line, root.col);
    }
    return parseList(root, false);
}

}  // namespace ndet
