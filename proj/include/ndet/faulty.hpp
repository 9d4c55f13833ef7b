#pragma once

#include <cstdint>

#include "ndet/list_backend.hpp"

namespace ndet {

// A deliberately wrong list backend for exercising the failure paths of the
// check commands: the seed selects which operation lies.  Never used outside
// tests and the CLI's hidden fault-injection flag.
struct FaultyBackend {
    using IntRep = int;
    using ListRep = ChoiceBag;

    ListBackend inner;
    int fault = 0;  // 0: fail produces a choice; 1: recur ignores body and z

    static FaultyBackend fromSeed(std::uint64_t seed) {
        return FaultyBackend{{}, static_cast<int>(seed % 2)};
    }

    IntRep mkInt(int n) { return inner.mkInt(n); }
    ListRep mkNil() { return inner.mkNil(); }
    ListRep mkCons(IntRep h, ListRep t) { return inner.mkCons(h, std::move(t)); }
    ListRep mkList(std::span<const int> xs) { return inner.mkList(xs); }

    ListRep mkFail() {
        if (fault == 0) return {{99}};
        return inner.mkFail();
    }

    ListRep mkChoice(ListRep l, ListRep r) { return inner.mkChoice(std::move(l), std::move(r)); }

    ListRep mkRecur(RecurBody<FaultyBackend> body, ListRep z, ListRep l) {
        if (fault == 1) return l;
        RecurBody<ListBackend> inBody = [body](int h, ChoiceBag t, ListThunk<ListBackend> r) {
            return body(h, std::move(t), std::move(r));
        };
        return inner.mkRecur(std::move(inBody), std::move(z), std::move(l));
    }

    ListRep mkRId(const Pred& p, ListRep l) { return inner.mkRId(p, std::move(l)); }
    ListRep mkOnce(ListRep l) { return inner.mkOnce(std::move(l)); }
    ChoiceBag runObs(ListRep l) { return l; }
};

static_assert(ObservableSemantics<FaultyBackend>);

}  // namespace ndet
