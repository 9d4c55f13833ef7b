#pragma once

#include <atomic>
#include <memory>
#include <span>
#include <vector>

#include "ndet/semantics.hpp"

namespace ndet {

inline constexpr int kChunkCapacity = 32;

namespace detail {

// A shared backing buffer.  Cells at indices >= low are claimed and never
// rewritten; a cons may claim cell low-1 with a compare-and-swap, so two
// lists sharing the buffer can never both write the same cell.
struct ChunkBuf {
    explicit ChunkBuf(int cap) : cells(static_cast<std::size_t>(cap)), low(cap) {}
    std::vector<int> cells;
    std::atomic<int> low;
};

}  // namespace detail

// A persistent integer list stored as a sequence of packed chunks: each chunk
// is an (offset, length) view into a shared buffer, and the logical value is
// the concatenation of the views.  Prepending reuses the front buffer's
// headroom when it can and never disturbs existing views.
class ChunkList {
  public:
    ChunkList() = default;

    static ChunkList fromSeq(std::span<const int> xs, int capacity = kChunkCapacity);

    ChunkList cons(int x, int capacity = kChunkCapacity) const;

    bool empty() const { return chunks_.empty(); }
    // Pre: !empty().
    int head() const;
    // Pre: !empty().  Shares every buffer with *this; the front view just
    // starts one cell later.
    ChunkList tail() const;

    std::vector<int> toSeq() const;

    std::size_t chunkCount() const { return chunks_.size(); }

  private:
    struct View {
        std::shared_ptr<detail::ChunkBuf> buf;
        int offset = 0;
        int length = 0;
    };
    std::vector<View> chunks_;  // front of the list first
};

using ChunkBag = std::vector<ChunkList>;

// The packed-buffer backend: same meaning as ListBackend, different carrier.
struct ChunkedBackend {
    using IntRep = int;
    using ListRep = ChunkBag;

    int capacity = kChunkCapacity;

    IntRep mkInt(int n) { return n; }

    ListRep mkNil() { return {ChunkList{}}; }

    ListRep mkCons(IntRep h, ListRep t) {
        for (auto& cl : t) cl = cl.cons(h, capacity);
        return t;
    }

    ListRep mkList(std::span<const int> xs) { return {ChunkList::fromSeq(xs, capacity)}; }

    ListRep mkFail() { return {}; }

    ListRep mkChoice(ListRep l, ListRep r) {
        l.insert(l.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
        return l;
    }

    ListRep mkRecur(RecurBody<ChunkedBackend> body, ListRep z, ListRep l) {
        ListRep out;
        for (const auto& cl : l) {
            ListRep piece = loop(body, z, cl);
            out.insert(out.end(), std::make_move_iterator(piece.begin()),
                       std::make_move_iterator(piece.end()));
        }
        return out;
    }

    ListRep mkRId(const Pred& p, ListRep l) {
        ListRep out;
        for (auto& cl : l) {
            if (holds(p, cl.toSeq())) out.push_back(std::move(cl));
        }
        return out;
    }

    ListRep mkOnce(ListRep l) {
        if (l.empty()) return {};
        return {std::move(l.front())};
    }

    ChoiceBag runObs(const ListRep& l) {
        ChoiceBag out;
        out.reserve(l.size());
        for (const auto& cl : l) out.push_back(cl.toSeq());
        return out;
    }

  private:
    ListRep loop(const RecurBody<ChunkedBackend>& body, const ListRep& z, const ChunkList& cl) {
        if (cl.empty()) return z;
        ChunkList t = cl.tail();
        ListThunk<ChunkedBackend> rec = [this, &body, &z, t] { return loop(body, z, t); };
        return body(cl.head(), ListRep{t}, std::move(rec));
    }
};

static_assert(ObservableSemantics<ChunkedBackend>);

}  // namespace ndet
