#include "ndet/chunk.hpp"

#include "ndet/core.hpp"

namespace ndet {

ChunkList ChunkList::fromSeq(std::span<const int> xs, int capacity) {
    if (capacity < 1) throw InternalError("chunk capacity must be at least 1");
    ChunkList out;
    if (xs.empty()) return out;

    // Split from the right: trailing chunks are full, the first chunk takes
    // the remainder and is end-aligned so later conses find headroom.
    std::size_t cap = static_cast<std::size_t>(capacity);
    std::size_t first = xs.size() % cap;
    if (first == 0) first = cap;

    std::size_t pos = 0;
    while (pos < xs.size()) {
        std::size_t count = pos == 0 ? first : cap;
        auto buf = std::make_shared<detail::ChunkBuf>(capacity);
        int offset = static_cast<int>(cap - count);
        for (std::size_t i = 0; i < count; i++) buf->cells[cap - count + i] = xs[pos + i];
        buf->low.store(offset, std::memory_order_release);
        out.chunks_.push_back(View{std::move(buf), offset, static_cast<int>(count)});
        pos += count;
    }
    return out;
}

ChunkList ChunkList::cons(int x, int capacity) const {
    if (capacity < 1) throw InternalError("chunk capacity must be at least 1");
    ChunkList out;
    if (!chunks_.empty()) {
        const View& front = chunks_.front();
        int off = front.offset;
        if (off > 0) {
            // Claim the cell just before our view.  The CAS fails if another
            // list sharing this buffer already took it; then we copy nothing
            // and start a fresh chunk instead.
            int expected = off;
            if (front.buf->low.compare_exchange_strong(expected, off - 1,
                                                       std::memory_order_acq_rel)) {
                front.buf->cells[off - 1] = x;
                out.chunks_ = chunks_;
                out.chunks_.front().offset = off - 1;
                out.chunks_.front().length = front.length + 1;
                return out;
            }
        }
    }
    auto buf = std::make_shared<detail::ChunkBuf>(capacity);
    buf->cells[static_cast<std::size_t>(capacity) - 1] = x;
    buf->low.store(capacity - 1, std::memory_order_release);
    out.chunks_.reserve(chunks_.size() + 1);
    out.chunks_.push_back(View{std::move(buf), capacity - 1, 1});
    out.chunks_.insert(out.chunks_.end(), chunks_.begin(), chunks_.end());
    return out;
}

int ChunkList::head() const {
    if (chunks_.empty()) throw InternalError("head of an empty chunk list");
    const View& front = chunks_.front();
    return front.buf->cells[static_cast<std::size_t>(front.offset)];
}

ChunkList ChunkList::tail() const {
    if (chunks_.empty()) throw InternalError("tail of an empty chunk list");
    ChunkList out;
    if (chunks_.front().length > 1) {
        out.chunks_ = chunks_;
        out.chunks_.front().offset++;
        out.chunks_.front().length--;
    } else {
        out.chunks_.assign(chunks_.begin() + 1, chunks_.end());
    }
    return out;
}

std::vector<int> ChunkList::toSeq() const {
    std::vector<int> out;
    for (const View& v : chunks_) {
        out.insert(out.end(), v.buf->cells.begin() + v.offset,
                   v.buf->cells.begin() + v.offset + v.length);
    }
    return out;
}

}  // namespace ndet
