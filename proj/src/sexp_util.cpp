#include "ndet/sexp_util.hpp"

#include <charconv>

namespace ndet::sexpio {

void fail(const sexp::Node& at, const std::string& msg) {
    throw ParseError(msg, at.line, at.col);
}

int parseInt(const sexp::Node& node) {
    if (!node.isAtom) fail(node, "expected an integer");
    int value = 0;
    const char* first = node.atom.data();
    const char* last = first + node.atom.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) fail(node, "expected an integer, got '" + node.atom + "'");
    return value;
}

const sexp::Node& arg(const sexp::Node& node, std::size_t i, std::size_t arity) {
    if (node.items.size() != arity + 1) {
        fail(node, "'" + node.items[0].atom + "' takes " + std::to_string(arity) + " arguments");
    }
    return node.items[i + 1];
}

Pred parsePred(const sexp::Node& node) {
    if (node.isAtom) {
        if (node.atom == "sorted") return Pred::sorted();
        if (node.atom == "sum-even") return Pred::sumEven();
        fail(node, "unknown predicate '" + node.atom + "'");
    }
    if (node.items.size() == 2 && node.items[0].isAtom && node.items[0].atom == "len<=") {
        int k = parseInt(node.items[1]);
        if (k < 0) fail(node.items[1], "len<= bound must be nonnegative");
        return Pred::lenAtMost(k);
    }
    fail(node, "unknown predicate");
}

}  // namespace ndet::sexpio
