#include "ndet/staged.hpp"

#include "ndet/eval.hpp"

namespace ndet {

using target::ExprPtr;

namespace {

// x :: l at the bag sort: one known alternative onto a bag expression.
ExprPtr scons(ExprPtr alt, ExprPtr bag) { return target::eCons(std::move(alt), std::move(bag)); }

bool isTrivialHead(const target::Expr& e) {
    return std::holds_alternative<target::IntLitE>(e.node) ||
           std::holds_alternative<target::VarE>(e.node);
}

}  // namespace

ExprPtr dyn(const StagedList& s) {
    if (!s.isKnown()) return s.expr();
    ExprPtr out = target::eNil();
    for (auto it = s.alts().rbegin(); it != s.alts().rend(); ++it) out = scons(*it, out);
    return out;
}

std::optional<std::vector<int>> staticSeq(const target::Expr& e) {
    if (std::holds_alternative<target::NilE>(e.node)) return std::vector<int>{};
    if (const auto* lit = std::get_if<target::ListLitE>(&e.node)) return lit->values;
    if (const auto* cons = std::get_if<target::ConsE>(&e.node)) {
        const auto* h = std::get_if<target::IntLitE>(&cons->head->node);
        if (!h) return std::nullopt;
        auto rest = staticSeq(*cons->tail);
        if (!rest) return std::nullopt;
        rest->insert(rest->begin(), h->value);
        return rest;
    }
    return std::nullopt;
}

StagedBackend::ListRep StagedBackend::mkCons(IntRep x, ListRep l) {
    if (!isTrivialHead(*x)) {
        // Let-insertion: name the head once so mapping it over many
        // alternatives cannot duplicate work.  (With the current term
        // language every head is a literal or a variable, so this arm is
        // dormant, but the policy keeps the backend safe under extension.)
        std::string name = names->fresh("x");
        return StagedList::U(
            target::eLet(name, x, target::eMapCons(target::eVar(name), dyn(l))));
    }
    if (l.isKnown()) {
        std::vector<ExprPtr> out;
        out.reserve(l.alts().size());
        for (const ExprPtr& alt : l.alts()) out.push_back(target::eCons(x, alt));
        return StagedList::K(std::move(out));
    }
    return StagedList::U(target::eMapCons(x, l.expr()));
}

StagedBackend::ListRep StagedBackend::mkChoice(ListRep l1, ListRep l2) {
    if (l1.isKnown() && l2.isKnown()) {
        std::vector<ExprPtr> out = l1.alts();
        out.insert(out.end(), l2.alts().begin(), l2.alts().end());
        return StagedList::K(std::move(out));
    }
    if (l1.isKnown()) {
        // Known alternatives on the left fold onto the dynamic right side.
        ExprPtr out = l2.expr();
        for (auto it = l1.alts().rbegin(); it != l1.alts().rend(); ++it) out = scons(*it, out);
        return StagedList::U(std::move(out));
    }
    if (l2.isKnown()) {
        // Known alternatives on the right must stay behind the dynamic left
        // side, so they cannot be folded on; append preserves the order.
        if (l2.alts().empty()) return l1;
        return StagedList::U(target::eAppend(l1.expr(), dyn(l2)));
    }
    return StagedList::U(target::eAppend(l1.expr(), l2.expr()));
}

StagedBackend::ListRep StagedBackend::recur1(const RecurBody<StagedBackend>& body, const ListRep& z,
                                             ExprPtr arg) {
    std::string go = names->fresh("go");
    std::string h = names->fresh("h");
    std::string t = names->fresh("t");
    std::string xs = names->fresh("xs");
    ExprPtr nilBranch = dyn(z);
    // Inside the cons branch, `go` stands for the recursive result on `t`.
    StagedList bodyOut = body(target::eVar(h), StagedList::K({target::eVar(t)}),
                              [&go] { return StagedList::U(target::eVar(go)); });
    ExprPtr consBranch = dyn(bodyOut);
    return StagedList::U(
        target::eLetRecMatch(go, xs, nilBranch, h, t, consBranch, std::move(arg)));
}

StagedBackend::ListRep StagedBackend::mkRecur(RecurBody<StagedBackend> body, ListRep z,
                                              ListRep l) {
    if (l.isKnown() && l.alts().empty()) return StagedList::K({});
    if (l.isKnown() && l.alts().size() == 1) return recur1(body, z, l.alts().front());
    std::string param = names->fresh("l");
    StagedList perAlt = recur1(body, z, target::eVar(param));
    return StagedList::U(target::eConcatMap(param, dyn(perAlt), dyn(l)));
}

StagedBackend::ListRep StagedBackend::mkRId(const Pred& p, ListRep s) {
    if (s.isKnown()) {
        std::vector<std::vector<int>> seqs;
        seqs.reserve(s.alts().size());
        bool allStatic = true;
        for (const ExprPtr& alt : s.alts()) {
            auto seq = staticSeq(*alt);
            if (!seq) {
                allStatic = false;
                break;
            }
            seqs.push_back(std::move(*seq));
        }
        if (allStatic) {
            std::vector<ExprPtr> kept;
            for (std::size_t i = 0; i < s.alts().size(); i++) {
                if (holds(p, seqs[i])) kept.push_back(s.alts()[i]);
            }
            return StagedList::K(std::move(kept));
        }
    }
    return StagedList::U(target::eFilter(p, dyn(s)));
}

StagedBackend::ListRep StagedBackend::mkOnce(ListRep s) {
    if (s.isKnown()) {
        if (s.alts().empty()) return StagedList::K({});
        return StagedList::K({s.alts().front()});
    }
    return StagedList::U(target::eTakeFirst(s.expr()));
}

ChoiceBag StagedBackend::runObs(const StagedList& s) {
    ExprPtr prog = dyn(s);
    return target::exec(*prog);
}

ExprPtr compileTerm(const Term& t) {
    NameSupply names;
    StagedBackend backend{&names};
    return dyn(evalWith(backend, t));
}

}  // namespace ndet
