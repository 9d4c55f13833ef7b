#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ndet/semantics.hpp"
#include "ndet/target.hpp"
#include "ndet/term.hpp"

namespace ndet {

// Compiling is just one more interpretation: the meaning of a list expression
// is residual code, annotated with what is known at compile time.

// Fresh-name source; reset at the start of every compilation so the same
// term always compiles to the same bytes.
struct NameSupply {
    int counter = 0;

    std::string fresh(std::string_view kind) {
        counter++;
        return std::string(kind) + "_" + std::to_string(counter);
    }
};

// Binding-time-annotated residual list computation.  Either every
// alternative is individually known as an int-list expression (K) — the
// empty K being certain failure — or all we have is one dynamic expression
// denoting the whole bag (U).
class StagedList {
  public:
    static StagedList K(std::vector<target::ExprPtr> alts) {
        StagedList s;
        s.alts_ = std::move(alts);
        return s;
    }
    static StagedList U(target::ExprPtr e) {
        StagedList s;
        s.expr_ = std::move(e);
        return s;
    }

    bool isKnown() const { return alts_.has_value(); }
    const std::vector<target::ExprPtr>& alts() const { return *alts_; }
    const target::ExprPtr& expr() const { return expr_; }

  private:
    std::optional<std::vector<target::ExprPtr>> alts_;
    target::ExprPtr expr_;
};

// Forgets static knowledge: K alternatives fold (right to left) into an
// explicit bag expression; U is already one.
target::ExprPtr dyn(const StagedList& s);

// Statically evaluates an expression that spells out an integer list
// (nil / cons of int literals / list literal); nullopt if it is anything else.
std::optional<std::vector<int>> staticSeq(const target::Expr& e);

struct StagedBackend {
    using IntRep = target::ExprPtr;
    using ListRep = StagedList;

    NameSupply* names;

    IntRep mkInt(int n) { return target::eInt(n); }

    ListRep mkNil() { return StagedList::K({target::eNil()}); }

    ListRep mkList(std::span<const int> xs) {
        return StagedList::K({target::eListLit({xs.begin(), xs.end()})});
    }

    ListRep mkFail() { return StagedList::K({}); }

    ListRep mkCons(IntRep x, ListRep l);
    ListRep mkChoice(ListRep l1, ListRep l2);
    ListRep mkRecur(RecurBody<StagedBackend> body, ListRep z, ListRep l);
    ListRep mkRId(const Pred& p, ListRep s);
    ListRep mkOnce(ListRep s);

    // Observation compiles and immediately runs the residual program.
    ChoiceBag runObs(const StagedList& s);

  private:
    ListRep recur1(const RecurBody<StagedBackend>& body, const ListRep& z, target::ExprPtr arg);
};

static_assert(ObservableSemantics<StagedBackend>);

// Residual program for a closed list-sort term; a fresh NameSupply makes the
// result reproducible.
target::ExprPtr compileTerm(const Term& t);

}  // namespace ndet
