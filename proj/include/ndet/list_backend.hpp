#pragma once

#include <utility>
#include <vector>

#include "ndet/semantics.hpp"

namespace ndet {

// Reference semantics: a nondeterministic list is the bag of its alternatives,
// each alternative a concrete std::vector<int>.  Choice is concatenation, so
// the left branch's alternatives always come first.
struct ListBackend {
    using IntRep = int;
    using ListRep = ChoiceBag;

    IntRep mkInt(int n) { return n; }

    ListRep mkNil() { return {{}}; }

    ListRep mkCons(IntRep h, ListRep t) {
        for (auto& alt : t) alt.insert(alt.begin(), h);
        return t;
    }

    ListRep mkList(std::span<const int> xs) { return {{xs.begin(), xs.end()}}; }

    ListRep mkFail() { return {}; }

    ListRep mkChoice(ListRep l, ListRep r) {
        l.insert(l.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
        return l;
    }

    ListRep mkRecur(RecurBody<ListBackend> body, ListRep z, ListRep l) {
        ListRep out;
        for (const auto& alt : l) {
            ListRep piece = loop(body, z, alt);
            out.insert(out.end(), std::make_move_iterator(piece.begin()),
                       std::make_move_iterator(piece.end()));
        }
        return out;
    }

    ListRep mkRId(const Pred& p, ListRep l) {
        ListRep out;
        for (auto& alt : l) {
            if (holds(p, alt)) out.push_back(std::move(alt));
        }
        return out;
    }

    ListRep mkOnce(ListRep l) {
        if (l.empty()) return {};
        return {std::move(l.front())};
    }

    ChoiceBag runObs(ListRep l) { return l; }

  private:
    ListRep loop(const RecurBody<ListBackend>& body, const ListRep& z,
                 const std::vector<int>& alt) {
        if (alt.empty()) return z;
        int h = alt.front();
        std::vector<int> t(alt.begin() + 1, alt.end());
        // The recursive result is recomputed on every force; nothing is shared.
        ListThunk<ListBackend> rec = [this, &body, &z, t] { return loop(body, z, t); };
        return body(h, ListRep{t}, std::move(rec));
    }
};

static_assert(ObservableSemantics<ListBackend>);

}  // namespace ndet
