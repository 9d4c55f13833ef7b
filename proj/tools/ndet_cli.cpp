#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndet/absint.hpp"
#include "ndet/chunk.hpp"
#include "ndet/eval.hpp"
#include "ndet/faulty.hpp"
#include "ndet/json_io.hpp"
#include "ndet/laws.hpp"
#include "ndet/list_backend.hpp"
#include "ndet/programs.hpp"
#include "ndet/staged.hpp"
#include "ndet/testkit.hpp"

namespace {

using namespace ndet;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

// Thrown for anything that is the caller's fault: bad flags, bad files.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parseInputList(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw UsageError("--input: '" + item + "' is not an integer");
        }
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ProgramChoice {
    std::string prog;      // "perm" | "sort" | ""
    std::string termFile;  // path | ""
    std::vector<int> input;
};

// Either a named program applied to --input, or a term read from a file.
TermPtr chooseTerm(const ProgramChoice& pc) {
    if (!pc.termFile.empty()) {
        try {
            return parseTerm(readFile(pc.termFile));
        } catch (const ParseError& e) {
            throw UsageError(pc.termFile + ":" + std::to_string(e.line) + ":" +
                             std::to_string(e.col) + ": " + e.what());
        }
    }
    return nullptr;
}

void validateProgramChoice(const ProgramChoice& pc) {
    if (pc.prog.empty() == pc.termFile.empty()) {
        throw UsageError("need exactly one program source: --prog or --term-file");
    }
    if (!pc.prog.empty() && pc.prog != "perm" && pc.prog != "sort") {
        throw UsageError("--prog must be 'perm' or 'sort'");
    }
}

template <Semantics S>
typename S::ListRep runProgram(S& sem, const std::string& prog, std::span<const int> input) {
    if (prog == "perm") return permNd(sem, sem.mkList(input));
    return sortNd(sem, sem.mkList(input));
}

template <ObservableSemantics S>
ChoiceBag observe(S& sem, const ProgramChoice& pc) {
    if (TermPtr t = chooseTerm(pc)) return sem.runObs(evalWith(sem, *t));
    return sem.runObs(runProgram(sem, pc.prog, pc.input));
}

int cmdRun(const ProgramChoice& pc, const std::string& backend) {
    ChoiceBag bag;
    if (backend == "list") {
        ListBackend b;
        bag = observe(b, pc);
    } else if (backend == "chunked") {
        ChunkedBackend b;
        bag = observe(b, pc);
    } else {
        throw UsageError("--backend must be 'list' or 'chunked'");
    }
    std::cout << bagToJson(bag) << "\n";
    return kExitOk;
}

int cmdAnalyze(const ProgramChoice& pc) {
    AbsBackend b;
    NdetDeg deg;
    if (TermPtr t = chooseTerm(pc)) {
        deg = evalWith(b, *t);
    } else {
        deg = runProgram(b, pc.prog, pc.input);
    }
    std::cout << degToJson(deg) << "\n";
    return kExitOk;
}

int cmdCompile(const ProgramChoice& pc, const std::string& outPath) {
    target::ExprPtr prog;
    if (TermPtr t = chooseTerm(pc)) {
        prog = compileTerm(*t);
    } else {
        NameSupply names;
        StagedBackend b{&names};
        prog = dyn(runProgram(b, pc.prog, pc.input));
    }
    std::string text = target::toText(*prog) + "\n";
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) throw UsageError("cannot write " + outPath);
        out << text;
    }
    return kExitOk;
}

int cmdExec(const std::string& path) {
    target::ExprPtr prog;
    try {
        prog = target::parseProgram(readFile(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.col) + ": " +
                         e.what());
    }
    try {
        std::cout << bagToJson(target::exec(*prog)) << "\n";
    } catch (const ScopeError& e) {
        throw UsageError(path + ": " + e.what());
    }
    return kExitOk;
}

template <Semantics S>
std::size_t reportLaws(S& sem, const char* title, std::uint64_t seed, int count) {
    std::vector<LawCase> cases;
    cases.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; i++) {
        GenConfig cfg;
        cfg.seed = seed + static_cast<std::uint64_t>(i);
        cases.push_back(genLawCase(cfg));
    }
    std::size_t violations = 0;
    std::cout << title << ":\n";
    for (const LawOutcome& o : lawSuite(sem, cases)) {
        std::cout << "  " << o.law << ": " << (o.cases - o.violations) << "/" << o.cases
                  << " ok\n";
        for (const std::string& s : o.samples) std::cout << "    " << s << "\n";
        violations += o.violations;
    }
    return violations;
}

int cmdCheckLaws(std::uint64_t seed, int count, bool injectFault) {
    std::size_t violations = 0;
    if (injectFault) {
        FaultyBackend faulty = FaultyBackend::fromSeed(seed);
        violations += reportLaws(faulty, "fault-injected backend", seed, count);
    } else {
        ListBackend list;
        violations += reportLaws(list, "list backend", seed, count);
        ChunkedBackend chunked;
        violations += reportLaws(chunked, "chunked backend", seed, count);
        NameSupply names;
        StagedBackend staged{&names};
        violations += reportLaws(staged, "compiled pipeline", seed, count);
    }
    std::cout << "law suite: " << violations << " violation(s)\n";
    return violations == 0 ? kExitOk : kExitViolations;
}

int cmdCrossCheck(std::uint64_t seed, int count) {
    std::size_t violations = 0;
    std::size_t shown = 0;
    for (int i = 0; i < count; i++) {
        GenConfig cfg;
        cfg.seed = seed + static_cast<std::uint64_t>(i);
        CrossReport rep = crossCheck(*genTerm(cfg));
        violations += rep.violations.size();
        for (const std::string& v : rep.violations) {
            if (shown < 10) {
                std::cout << "  " << v << "\n";
                shown++;
            }
        }
    }
    std::cout << "crosscheck: " << count << " terms, " << violations << " violation(s)\n";
    return violations == 0 ? kExitOk : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nondeterministic list DSL: run, analyze, compile, and check"};
    app.require_subcommand(1);

    ProgramChoice pc;
    std::string backend = "list";
    std::string input;
    std::string outPath;
    std::string execFile;
    std::uint64_t seed = 42;
    int count = 500;
    bool injectFault = false;

    auto addSource = [&](CLI::App* cmd) {
        cmd->add_option("--prog", pc.prog, "built-in program: perm or sort");
        cmd->add_option("--term-file", pc.termFile, "file holding one term s-expression");
        cmd->add_option("--input", input, "comma-separated integers (empty for the empty list)");
    };

    CLI::App* run = app.add_subcommand("run", "evaluate and print the bag of outcomes as JSON");
    addSource(run);
    run->add_option("--backend", backend, "list or chunked")->capture_default_str();

    CLI::App* analyze =
        app.add_subcommand("analyze", "print the degree of nondeterminism as JSON");
    addSource(analyze);

    CLI::App* compile = app.add_subcommand("compile", "emit a residual target program");
    addSource(compile);
    compile->add_option("--out", outPath, "output path (stdout when omitted)");

    CLI::App* exec = app.add_subcommand("exec", "run a compiled target program file");
    exec->add_option("file", execFile, "target program s-expression file")->required();

    CLI::App* checkLaws =
        app.add_subcommand("check-laws", "verify the identities on generated instantiations");
    checkLaws->add_option("--seed", seed, "")->capture_default_str();
    checkLaws->add_option("--count", count, "")->capture_default_str();
    checkLaws->add_flag("--inject-fault", injectFault, "")->group("");

    CLI::App* cross =
        app.add_subcommand("crosscheck", "compare every backend on generated terms");
    cross->add_option("--seed", seed, "")->capture_default_str();
    cross->add_option("--count", count, "")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        pc.input = parseInputList(input);
        if (run->parsed()) {
            validateProgramChoice(pc);
            return cmdRun(pc, backend);
        }
        if (analyze->parsed()) {
            validateProgramChoice(pc);
            return cmdAnalyze(pc);
        }
        if (compile->parsed()) {
            validateProgramChoice(pc);
            return cmdCompile(pc, outPath);
        }
        if (exec->parsed()) return cmdExec(execFile);
        if (checkLaws->parsed()) return cmdCheckLaws(seed, count, injectFault);
        if (cross->parsed()) return cmdCrossCheck(seed, count);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
