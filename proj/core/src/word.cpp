#include "loopalg/word.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_set>

namespace loopalg {

namespace {

std::size_t content_hash(const std::vector<Letter>& letters, int8_t src, int8_t tgt) {
    // FNV-1a over the letter stream and the endpoints.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(std::size_t(uint8_t(src)));
    mix(std::size_t(uint8_t(tgt)));
    for (const Letter& l : letters) {
        mix(std::size_t(uint16_t(l.gen)));
        mix(std::size_t(uint8_t(l.exp)));
        mix(std::size_t(uint8_t(l.src)));
        mix(std::size_t(uint8_t(l.tgt)));
    }
    return h;
}

struct PoolHash {
    using is_transparent = void;
    std::size_t operator()(const detail::WordData* d) const { return d->hash; }
};
struct PoolEq {
    bool operator()(const detail::WordData* a, const detail::WordData* b) const {
        return a->hash == b->hash && a->src == b->src && a->tgt == b->tgt &&
               a->letters == b->letters;
    }
};

// Global intern pool. A pure cache: identical content always yields the same
// canonical WordData, and entries live for the whole process so raw pointers
// stay valid. Guarded by a shared mutex so concurrent readers are cheap.
class WordPool {
public:
    const detail::WordData* intern(std::vector<Letter>&& letters, int8_t src, int8_t tgt) {
        detail::WordData probe{std::move(letters), src, tgt, 0};
        probe.hash = content_hash(probe.letters, src, tgt);
        {
            std::shared_lock lock(mutex_);
            auto it = entries_.find(&probe);
            if (it != entries_.end())
                return *it;
        }
        std::unique_lock lock(mutex_);
        auto it = entries_.find(&probe);
        if (it != entries_.end())
            return *it;
        auto* owned = new detail::WordData(std::move(probe));
        entries_.insert(owned);
        return owned;
    }

    static WordPool& instance() {
        static WordPool* pool = new WordPool; // intentionally leaked
        return *pool;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_set<const detail::WordData*, PoolHash, PoolEq> entries_;
};

} // namespace

Word Word::identity(int object) {
    return Word(WordPool::instance().intern({}, int8_t(object), int8_t(object)));
}

Word Word::of_letters(std::span<const Letter> letters, int object_if_empty) {
    if (letters.empty()) {
        if (object_if_empty < 0)
            throw std::invalid_argument("empty letter chain needs a base object");
        return identity(object_if_empty);
    }
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i].tgt != letters[i + 1].src)
            throw std::invalid_argument("non-composable letter chain");
    std::vector<Letter> reduced;
    reduced.reserve(letters.size());
    for (const Letter& l : letters) {
        if (!reduced.empty() && reduced.back().is_inverse_of(l))
            reduced.pop_back();
        else
            reduced.push_back(l);
    }
    int8_t src = letters.front().src;
    int8_t tgt = letters.back().tgt;
    if (reduced.empty())
        return identity(src);
    return Word(WordPool::instance().intern(std::move(reduced), src, tgt));
}

Word Word::prefix(std::size_t i) const {
    if (i == 0)
        return identity(source());
    return Word::of_letters({d_->letters.data(), i});
}

Word Word::suffix(std::size_t i) const {
    if (i >= size())
        return identity(target());
    return Word::of_letters({d_->letters.data() + i, size() - i});
}

Word Word::rotated(std::size_t k) const {
    if (is_identity() || k % size() == 0)
        return *this;
    k %= size();
    std::vector<Letter> letters;
    letters.reserve(size());
    letters.insert(letters.end(), d_->letters.begin() + std::ptrdiff_t(k), d_->letters.end());
    letters.insert(letters.end(), d_->letters.begin(), d_->letters.begin() + std::ptrdiff_t(k));
    return Word::of_letters(letters);
}

Word Word::inverse() const {
    if (is_identity())
        return *this;
    std::vector<Letter> letters;
    letters.reserve(size());
    for (auto it = d_->letters.rbegin(); it != d_->letters.rend(); ++it)
        letters.push_back(it->inverse());
    return Word::of_letters(letters);
}

bool operator<(const Word& a, const Word& b) {
    if (a.d_ == b.d_)
        return false;
    const bool ia = a.is_identity(), ib = b.is_identity();
    if (ia != ib)
        return ia;
    if (ia)
        return a.source() < b.source();
    if (a.size() != b.size())
        return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Letter &la = a.letter(i), &lb = b.letter(i);
        if (la.gen != lb.gen || la.exp != lb.exp)
            return letter_less(la, lb);
    }
    return false;
}

std::optional<Word> compose(const Word& x, const Word& y) {
    if (x.target() != y.source())
        return std::nullopt;
    if (x.is_identity())
        return y;
    if (y.is_identity())
        return x;
    std::vector<Letter> letters;
    letters.reserve(x.size() + y.size());
    letters.insert(letters.end(), x.letters().begin(), x.letters().end());
    letters.insert(letters.end(), y.letters().begin(), y.letters().end());
    return Word::of_letters(letters, x.source());
}

CyclicWord CyclicWord::of_loop(const Word& w) {
    if (!w.is_loop())
        throw std::invalid_argument("cyclic class of a non-loop word");
    // Cyclic reduction: strip cancelling first/last pairs.
    std::vector<Letter> letters = w.letters();
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo].is_inverse_of(letters[hi - 1])) {
        ++lo;
        --hi;
    }
    if (lo == hi)
        return unit();
    Word base = Word::of_letters({letters.data() + lo, hi - lo});
    if (base.is_identity())
        return unit();
    // Canonical representative: the least rotation.
    Word best = base;
    for (std::size_t k = 1; k < base.size(); ++k) {
        Word rot = base.rotated(k);
        if (rot < best)
            best = rot;
    }
    return CyclicWord(best);
}

} // namespace loopalg
