#include <doctest.h>

#include <string>
#include <vector>

#include "cli_util.hpp"

using cliu::RunResult;
using cliu::TempFile;
using cliu::runCli;

namespace {

const std::string kPermGolden =
    "[[1,2,3],[2,1,3],[2,3,1],[1,3,2],[3,1,2],[3,2,1]]\n";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("run: permutations on both backends") {
        auto list = runCli({"run", "--prog", "perm", "--input", "1,2,3"});
        CHECK(list.exitCode == 0);
        CHECK(list.output == kPermGolden);
        auto chunked =
            runCli({"run", "--prog", "perm", "--backend", "chunked", "--input", "1,2,3"});
        CHECK(chunked.exitCode == 0);
        CHECK(chunked.output == kPermGolden);
    }

    TEST_CASE("run: sorting commits to the one sorted permutation") {
        auto res = runCli({"run", "--prog", "sort", "--input", "3,1,4,1,5,9,2"});
        CHECK(res.exitCode == 0);
        CHECK(res.output == "[[9,5,4,3,2,1,1]]\n");
    }

    TEST_CASE("run: empty input is the empty list") {
        auto res = runCli({"run", "--prog", "perm", "--input", ""});
        CHECK(res.exitCode == 0);
        CHECK(res.output == "[[]]\n");
    }

    TEST_CASE("run: terms from a file") {
        TempFile term("(choice (list 1) (fail))\n");
        auto res = runCli({"run", "--term-file", term.path()});
        CHECK(res.exitCode == 0);
        CHECK(res.output == "[[1]]\n");
        TempFile once("(once (rid sorted (choice (list 1 2) (list 2 1))))");
        auto res2 = runCli({"run", "--term-file", once.path()});
        CHECK(res2.exitCode == 0);
        CHECK(res2.output == "[[2,1]]\n");
    }

    TEST_CASE("analyze: programs and terms") {
        auto perm = runCli({"analyze", "--prog", "perm", "--input", "1,2,3"});
        CHECK(perm.exitCode == 0);
        CHECK(perm.output == "{\"can_fail\":true,\"choices\":\"inf\"}\n");
        TempFile fail("(fail)");
        auto res = runCli({"analyze", "--term-file", fail.path()});
        CHECK(res.exitCode == 0);
        CHECK(res.output == "{\"can_fail\":true,\"choices\":1}\n");
        TempFile det("(cons (int 20) (choice (nil) (cons (int 10) (nil))))");
        auto res2 = runCli({"analyze", "--term-file", det.path()});
        CHECK(res2.output == "{\"can_fail\":false,\"choices\":2}\n");
    }

    TEST_CASE("compile then exec reproduces run exactly") {
        auto ran = runCli({"run", "--prog", "perm", "--input", "1,2,3"});
        TempFile out;
        auto compiled =
            runCli({"compile", "--prog", "perm", "--input", "1,2,3", "--out", out.path()});
        CHECK(compiled.exitCode == 0);
        auto execed = runCli({"exec", out.path()});
        CHECK(execed.exitCode == 0);
        CHECK(execed.output == ran.output);
    }

    TEST_CASE("compile writes to stdout when --out is omitted") {
        TempFile term("(fail)");
        auto res = runCli({"compile", "--term-file", term.path()});
        CHECK(res.exitCode == 0);
        CHECK(res.output == "(nil)\n");
    }

    TEST_CASE("recompiling gives byte-identical files") {
        TempFile a, b;
        runCli({"compile", "--prog", "sort", "--input", "3,1,2", "--out", a.path()});
        runCli({"compile", "--prog", "sort", "--input", "3,1,2", "--out", b.path()});
        CHECK_FALSE(a.read().empty());
        CHECK(a.read() == b.read());
    }

    TEST_CASE("exec runs handwritten programs") {
        TempFile prog("(mapcons (intlit 5) (cons (listlit 1) (cons (nil) (nil))))");
        auto res = runCli({"exec", prog.path()});
        CHECK(res.exitCode == 0);
        CHECK(res.output == "[[5,1],[5]]\n");
    }

    TEST_CASE("check-laws passes and is reproducible") {
        auto a = runCli({"check-laws", "--count", "25", "--seed", "7"});
        CHECK(a.exitCode == 0);
        CHECK(a.output.find("law suite: 0 violation(s)") != std::string::npos);
        CHECK(a.output.find("recur-cons: 25/25 ok") != std::string::npos);
        auto b = runCli({"check-laws", "--count", "25", "--seed", "7"});
        CHECK(a.output == b.output);
    }

    TEST_CASE("check-laws reports injected faults with exit 1") {
        for (const char* seed : {"0", "1"}) {
            auto res = runCli({"check-laws", "--count", "15", "--seed", seed, "--inject-fault"});
            CAPTURE(seed);
            CHECK(res.exitCode == 1);
            CHECK(res.output.find(" 0 violation(s)") == std::string::npos);
        }
    }

    TEST_CASE("crosscheck passes on generated terms") {
        auto res = runCli({"crosscheck", "--count", "25"});
        CHECK(res.exitCode == 0);
        CHECK(res.output.find("crosscheck: 25 terms, 0 violation(s)") != std::string::npos);
    }

    TEST_CASE("usage errors exit with 2") {
        CHECK(runCli({}).exitCode == 2);                               // no subcommand
        CHECK(runCli({"bogus"}).exitCode == 2);                        // unknown subcommand
        CHECK(runCli({"run", "--nope"}).exitCode == 2);                // unknown flag
        CHECK(runCli({"run"}).exitCode == 2);                          // no source
        CHECK(runCli({"run", "--prog", "frobnicate"}).exitCode == 2);  // unknown program
        CHECK(runCli({"exec"}).exitCode == 2);                         // missing file
        CHECK(runCli({"exec", "/nonexistent/path"}).exitCode == 2);
        CHECK(runCli({"run", "--prog", "perm", "--input", "1,x"}).exitCode == 2);
        CHECK(runCli({"run", "--prog", "perm", "--backend", "bogus"}).exitCode == 2);
        TempFile term("(nil)");
        auto both = runCli({"run", "--prog", "perm", "--term-file", term.path()});
        CHECK(both.exitCode == 2);
    }

    TEST_CASE("file errors carry positions") {
        TempFile bad("(choice (nil)\n  (bogus))");
        auto res = runCli({"run", "--term-file", bad.path()}, /*mergeStderr=*/true);
        CHECK(res.exitCode == 2);
        CHECK(res.output.find(":2:") != std::string::npos);
        TempFile open("(var x)");
        auto res2 = runCli({"exec", open.path()}, /*mergeStderr=*/true);
        CHECK(res2.exitCode == 2);
        CHECK(res2.output.find("unbound") != std::string::npos);
    }

    TEST_CASE("help is help, not an error") {
        auto res = runCli({"--help"});
        CHECK(res.exitCode == 0);
        CHECK(res.output.find("run") != std::string::npos);
    }
}
