#ifndef ZF_VERTEX_SET_HPP
#define ZF_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zf {

using VertexId = std::uint32_t;

// Fixed-universe bit set over vertex ids {0..n-1}.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
    VertexSet(std::size_t universe, std::span<const VertexId> ids) : VertexSet(universe) {
        for (auto v : ids)
            set(v);
    }
    VertexSet(std::size_t universe, std::initializer_list<VertexId> ids) : VertexSet(universe) {
        for (auto v : ids)
            set(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_)
            w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool test(VertexId v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void set(VertexId v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void reset(VertexId v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w != 0)
                return true;
        return false;
    }
    bool none() const { return !any(); }
    bool all() const { return count() == universe_; }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }
    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Smallest member of (this \ other), or universe() if empty.
    std::size_t first_not_in(const VertexSet& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i] & ~other.words_[i];
            if (w)
                return i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        }
        return universe_;
    }
    // Number of members of (this \ other), stopping once it exceeds `limit`.
    std::size_t count_not_in(const VertexSet& other, std::size_t limit) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size() && c <= limit; ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                auto b = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<VertexId>(i * kWordBits + b));
                w &= w - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    std::span<const Word> words() const { return words_; }

private:
    void trim() {
        if (universe_ % kWordBits && !words_.empty())
            words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace zf

#endif // ZF_VERTEX_SET_HPP
