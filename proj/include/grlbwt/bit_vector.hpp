#ifndef GRLBWT_BIT_VECTOR_HPP
#define GRLBWT_BIT_VECTOR_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "grlbwt/common.hpp"

namespace grlbwt {

// Plain bit vector with an optional rank-over-ones directory. The directory
// stores one cumulative count per 64-bit word and must be rebuilt with
// build_rank() after the last modification.
class bit_vector {
public:
    bit_vector() = default;
    explicit bit_vector(size_type n, bool value = false)
        : size_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        clear_tail();
    }

    size_type size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool operator[](size_type i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set(size_type i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void push_back(bool value) {
        if ((size_ & 63) == 0) words_.push_back(0);
        ++size_;
        set(size_ - 1, value);
    }

    void resize(size_type n) {
        words_.resize((n + 63) / 64, 0);
        size_ = n;
        clear_tail();
    }

    size_type count_ones() const {
        size_type c = 0;
        for (auto w : words_) c += static_cast<size_type>(std::popcount(w));
        return c;
    }

    void build_rank() {
        rank_dir_.assign(words_.size() + 1, 0);
        for (size_type w = 0; w < words_.size(); ++w) {
            rank_dir_[w + 1] = rank_dir_[w] + static_cast<size_type>(std::popcount(words_[w]));
        }
    }

    // Number of ones in [0, i).
    size_type rank1(size_type i) const {
        const size_type w = i >> 6;
        const unsigned off = static_cast<unsigned>(i & 63);
        size_type r = rank_dir_[w];
        if (off != 0) r += static_cast<size_type>(std::popcount(words_[w] & ((std::uint64_t{1} << off) - 1)));
        return r;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    bool operator==(const bit_vector& o) const { return size_ == o.size_ && words_ == o.words_; }

private:
    void clear_tail() {
        if ((size_ & 63) != 0 && !words_.empty()) {
            words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
        }
    }

    size_type size_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<size_type> rank_dir_;
};

}  // namespace grlbwt

#endif
