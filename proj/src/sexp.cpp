#include "ndet/sexp.hpp"

#include <cctype>

namespace ndet::sexp {

namespace {

struct Reader {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }

    char peek() const { return text[pos]; }

    char next() {
        char c = text[pos++];
        if (c == '\n') {
            line++;
            col = 1;
        } else {
            col++;
        }
        return c;
    }

    void skipSpace() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) next();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    Node readNode() {
        skipSpace();
        if (done()) fail("unexpected end of input");
        Node node;
        node.line = line;
        node.col = col;
        if (peek() == '(') {
            next();
            node.isAtom = false;
            for (;;) {
                skipSpace();
                if (done()) fail("unterminated '('");
                if (peek() == ')') {
                    next();
                    break;
                }
                node.items.push_back(readNode());
            }
            return node;
        }
        if (peek() == ')') fail("unexpected ')'");
        node.isAtom = true;
        while (!done() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '(' &&
               peek() != ')') {
            node.atom += next();
        }
        return node;
    }
};

}  // namespace

Node parseOne(std::string_view text) {
    Reader r{text};
    Node node = r.readNode();
    r.skipSpace();
    if (!r.done()) r.fail("trailing input after expression");
    return node;
}

}  // namespace ndet::sexp
