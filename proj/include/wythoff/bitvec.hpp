#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wythoff {

// Growable bit array. Bits read as 0 until set; set() extends storage on demand.
class bitvec {
public:
    bitvec() = default;
    explicit bitvec(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::uint64_t i) {
        const std::uint64_t w = i >> 6;
        if (w >= words_.size()) words_.resize(w + 1 + w / 2, 0);
        words_[w] |= std::uint64_t{1} << (i & 63);
    }

    [[nodiscard]] bool test(std::uint64_t i) const {
        const std::uint64_t w = i >> 6;
        return w < words_.size() && ((words_[w] >> (i & 63)) & 1) != 0;
    }

    // First clear bit at or after `from`.
    [[nodiscard]] std::uint64_t find_zero(std::uint64_t from) const {
        std::uint64_t w = from >> 6;
        if (w >= words_.size()) return from;
        // bits below `from` in the first word count as occupied
        std::uint64_t word = words_[w] | ((std::uint64_t{1} << (from & 63)) - 1);
        for (;;) {
            if (word != ~std::uint64_t{0})
                return (w << 6) + static_cast<std::uint64_t>(std::countr_one(word));
            if (++w == words_.size()) return w << 6;
            word = words_[w];
        }
    }

    [[nodiscard]] std::uint64_t popcount() const {
        std::uint64_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
        return n;
    }

private:
    std::vector<std::uint64_t> words_;
};

// Hands out the minimum excludant of an insert-only set of non-negative integers.
// The cursor never moves backwards: values below it are all present.
class mex_allocator {
public:
    void insert(std::uint64_t v) { used_.set(v); }
    [[nodiscard]] bool contains(std::uint64_t v) const { return used_.test(v); }
    [[nodiscard]] std::uint64_t mex() {
        cursor_ = used_.find_zero(cursor_);
        return cursor_;
    }

private:
    bitvec used_;
    std::uint64_t cursor_ = 0;
};

} // namespace wythoff
