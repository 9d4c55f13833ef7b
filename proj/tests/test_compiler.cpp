#include <doctest.h>

#include <vector>

#include "ndet/eval.hpp"
#include "ndet/list_backend.hpp"
#include "ndet/staged.hpp"
#include "ndet/term.hpp"
#include "ndet/testkit.hpp"

using namespace ndet;

namespace {

ChoiceBag runCompiled(const Term& t) {
    auto prog = compileTerm(t);
    target::checkScopes(*prog);
    return target::exec(*prog);
}

ChoiceBag evalList(const Term& t) {
    ListBackend b;
    return b.runObs(evalWith(b, t));
}

}  // namespace

TEST_SUITE("compiler") {
    TEST_CASE("compiled programs agree with evaluation on 500 generated terms") {
        GenConfig cfg;
        cfg.seed = 42;
        for (int i = 0; i < 500; i++) {
            GenConfig c = cfg;
            c.seed = cfg.seed + static_cast<std::uint64_t>(i);
            auto t = genTerm(c);
            CAPTURE(printTerm(*t));
            CHECK(runCompiled(*t) == evalList(*t));
        }
    }

    TEST_CASE("agreement also holds without committed choice in the mix") {
        GenConfig cfg;
        cfg.seed = 4242;
        cfg.committedChoice = false;
        for (int i = 0; i < 500; i++) {
            GenConfig c = cfg;
            c.seed = cfg.seed + static_cast<std::uint64_t>(i);
            auto t = genTerm(c);
            CAPTURE(printTerm(*t));
            CHECK(runCompiled(*t) == evalList(*t));
        }
    }

    TEST_CASE("every generated term compiles to a well-scoped program") {
        GenConfig cfg;
        cfg.seed = 9;
        cfg.maxDepth = 6;
        for (int i = 0; i < 200; i++) {
            GenConfig c = cfg;
            c.seed = cfg.seed + static_cast<std::uint64_t>(i);
            auto t = genTerm(c);
            auto prog = compileTerm(*t);
            CAPTURE(printTerm(*t));
            CHECK_NOTHROW(target::checkScopes(*prog));
            // The residual text parses back to the same program.
            auto text = target::toText(*prog);
            CHECK(target::exprEq(*target::parseProgram(text), *prog));
        }
    }

    TEST_CASE("pipeline crosscheck finds no disagreements on 500 terms") {
        GenConfig cfg;
        cfg.seed = 1000;
        for (int i = 0; i < 500; i++) {
            GenConfig c = cfg;
            c.seed = cfg.seed + static_cast<std::uint64_t>(i);
            auto t = genTerm(c);
            CrossReport rep = crossCheck(*t);
            CAPTURE(printTerm(*t));
            CAPTURE(rep.violations);
            CHECK(rep.ok());
        }
    }
}
