#ifndef GRLBWT_RLE_HPP
#define GRLBWT_RLE_HPP

#include <span>
#include <vector>

#include "grlbwt/common.hpp"

namespace grlbwt {

struct run {
    symbol_t symbol = 0;
    size_type length = 0;

    bool operator==(const run&) const = default;
};

// Sequence of maximal equal-symbol runs. Symbol 0 is allowed so the same type
// holds pBWT (with EMPTY entries), BWT and induction buckets.
class run_sequence {
public:
    run_sequence() = default;

    // Extends the last run when the symbol matches, otherwise opens a new one.
    void append_run(symbol_t symbol, size_type length) {
        if (length == 0) throw error("append_run: run length must be positive");
        total_ += length;
        if (!runs_.empty() && runs_.back().symbol == symbol) {
            runs_.back().length += length;
        } else {
            runs_.push_back({symbol, length});
        }
    }

    void append_run(const run& r) { append_run(r.symbol, r.length); }

    // Opens a new run even when the symbol repeats. pBWT uses this for EMPTY
    // entries, which stay separate because each one is a distinct rank.
    void append_separate(symbol_t symbol, size_type length) {
        if (length == 0) throw error("append_separate: run length must be positive");
        total_ += length;
        runs_.push_back({symbol, length});
    }
    void append_symbol(symbol_t symbol) { append_run(symbol, 1); }

    const std::vector<run>& runs() const { return runs_; }
    size_type run_count() const { return runs_.size(); }
    size_type total() const { return total_; }
    bool empty() const { return runs_.empty(); }

    void reserve(size_type n) { runs_.reserve(n); }
    void clear() {
        runs_.clear();
        total_ = 0;
    }

    template <class F>
    void for_each_symbol(F&& f) const {
        for (const auto& r : runs_) {
            for (size_type i = 0; i < r.length; ++i) f(r.symbol);
        }
    }

    std::vector<symbol_t> symbols() const {
        std::vector<symbol_t> out;
        out.reserve(total_);
        for_each_symbol([&](symbol_t s) { out.push_back(s); });
        return out;
    }

    static run_sequence encode(std::span<const symbol_t> symbols) {
        run_sequence seq;
        for (auto s : symbols) seq.append_symbol(s);
        return seq;
    }

    bool operator==(const run_sequence& o) const { return runs_ == o.runs_; }

private:
    std::vector<run> runs_;
    size_type total_ = 0;
};

// Forward cursor over an in-memory run sequence; the same next() interface is
// offered by the on-disk run reader so the induction code works on either.
class run_cursor {
public:
    explicit run_cursor(const run_sequence& seq) : runs_(&seq.runs()) {}

    bool next(run& out) {
        if (idx_ == runs_->size()) return false;
        out = (*runs_)[idx_++];
        return true;
    }

private:
    const std::vector<run>* runs_;
    size_type idx_ = 0;
};

}  // namespace grlbwt

#endif
