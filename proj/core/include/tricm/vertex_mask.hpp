#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tricm {

/// Dynamic-width bit set over vertex indices.
class VertexMask {
public:
    VertexMask() = default;
    explicit VertexMask(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(std::size_t v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool test(std::size_t v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool intersects(const VertexMask& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexMask& operator&=(const VertexMask& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    VertexMask& operator|=(const VertexMask& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }
    /// this &= ~other
    VertexMask& subtract(const VertexMask& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        return *this;
    }

    /// Index of the first set bit at or after `from`, or size() if none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t w = from >> 6;
        std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (word) return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
            if (++w == words_.size()) return size_;
            word = words_[w];
        }
    }

    friend bool operator==(const VertexMask&, const VertexMask&) = default;

private:
    void trim() noexcept {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace tricm
