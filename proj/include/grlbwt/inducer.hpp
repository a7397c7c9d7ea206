#ifndef GRLBWT_INDUCER_HPP
#define GRLBWT_INDUCER_HPP

#include <limits>
#include <span>
#include <vector>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/bit_vector.hpp"
#include "grlbwt/common.hpp"
#include "grlbwt/dictionary.hpp"
#include "grlbwt/rle.hpp"

namespace grlbwt {

// BWT of the last parsing round: every string is a single symbol, so the text
// itself is its BCR BWT.
run_sequence base_bwt(const text_level& final_level);

// Lengths of the EMPTY entries of a pBWT, indexed by rank (entry 0 unused).
template <class Source>
std::vector<size_type> empty_lengths(Source& pbwt) {
    std::vector<size_type> out{0};
    run r;
    while (pbwt.next(r)) {
        if (r.symbol == dummy_symbol) out.push_back(r.length);
    }
    return out;
}

namespace detail {

inline void check_rank(symbol_t b, const compressed_dict& cd) {
    if (b == 0 || b > cd.sigma_next) {
        throw corruption_error("rank " + std::to_string(b) + " outside [1, " + std::to_string(cd.sigma_next) + "]");
    }
}

}  // namespace detail

// Decompressed pair chains, each walked once on first use. A chain lists the
// left-maximal suffixes of a rank's string with their left contexts and ends
// in a terminal symbol. Every hop moves to a shorter suffix, so the cache never
// holds more entries than the dictionary has symbols.
class chain_cache {
public:
    struct link {
        symbol_t bucket;
        symbol_t left;
    };

    explicit chain_cache(const compressed_dict& cd)
        : cd_(&cd), begin_(cd.sigma_next + 1, unset), length_(cd.sigma_next + 1, 0), terminal_(cd.sigma_next + 1, 0) {}

    std::span<const link> links(symbol_t b) {
        walk(b);
        return {links_.data() + begin_[b], length_[b]};
    }
    symbol_t terminal(symbol_t b) {
        walk(b);
        return terminal_[b];
    }
    // Pointer hops taken so far.
    size_type steps() const { return steps_; }

private:
    static constexpr size_type unset = std::numeric_limits<size_type>::max();

    void walk(symbol_t b) {
        detail::check_rank(b, *cd_);
        if (begin_[b] != unset) return;
        const size_type first = links_.size();
        symbol_t cur = b;
        for (size_type hops = 0;; ++hops) {
            const compressed_pair& p = cd_->pairs[cur];
            if (!p.next_is_rank) {
                terminal_[b] = p.next;
                break;
            }
            if (hops > cd_->sigma_next) throw corruption_error("compressed dictionary chain does not terminate");
            detail::check_rank(p.next, *cd_);
            links_.push_back({p.next, p.left});
            ++steps_;
            cur = p.next;
        }
        begin_[b] = first;
        length_[b] = links_.size() - first;
    }

    const compressed_dict* cd_;
    std::vector<size_type> begin_;
    std::vector<size_type> length_;
    std::vector<symbol_t> terminal_;
    std::vector<link> links_;
    size_type steps_ = 0;
};

// Run-slot budget of every bucket, from a first pass over BWT^{i+1}.
struct bucket_plan {
    std::vector<size_type> capacity;   // l_b, indexed by rank
    std::vector<size_type> run_slots;  // indexed by rank
    bit_vector occurs;                 // rank b occurs in BWT^{i+1}
};

template <class Source>
bucket_plan size_buckets(Source& bwt_next, const compressed_dict& cd, std::vector<size_type> capacity,
                         chain_cache& chains) {
    if (capacity.size() != cd.sigma_next + 1) {
        throw corruption_error("pBWT has " + std::to_string(capacity.size() - 1) + " EMPTY entries but the dictionary has " +
                               std::to_string(cd.sigma_next) + " ranks");
    }
    constexpr symbol_t none = std::numeric_limits<symbol_t>::max();
    bucket_plan plan;
    plan.capacity = std::move(capacity);
    plan.run_slots.assign(cd.sigma_next + 1, 0);
    plan.occurs = bit_vector(cd.sigma_next + 1);
    std::vector<symbol_t> last(cd.sigma_next + 1, none);
    auto count = [&](symbol_t b, symbol_t s) {
        if (last[b] != s) {
            ++plan.run_slots[b];
            last[b] = s;
        }
    };

    run r;
    while (bwt_next.next(r)) {
        const auto links = chains.links(r.symbol);
        plan.occurs.set(r.symbol);
        if (cd.proper_suffix[r.symbol]) count(r.symbol, dummy_symbol);
        for (const auto& l : links) count(l.bucket, l.left);
    }
    return plan;
}

// The vector P split into one run-length bucket per rank.
class induction_buckets {
public:
    induction_buckets() = default;
    explicit induction_buckets(const bucket_plan& plan) {
        offsets_.assign(plan.run_slots.size() + 1, 0);
        for (size_type b = 0; b < plan.run_slots.size(); ++b) offsets_[b + 1] = offsets_[b] + plan.run_slots[b];
        runs_.resize(offsets_.back());
        fill_.assign(plan.run_slots.size(), 0);
        length_.assign(plan.run_slots.size(), 0);
    }

    void append(symbol_t b, symbol_t symbol, size_type length) {
        const size_type base = offsets_[b];
        if (fill_[b] > 0 && runs_[base + fill_[b] - 1].symbol == symbol) {
            runs_[base + fill_[b] - 1].length += length;
        } else {
            if (base + fill_[b] >= offsets_[b + 1]) {
                throw corruption_error("bucket " + std::to_string(b) + " overflows its planned run slots");
            }
            runs_[base + fill_[b]++] = {symbol, length};
        }
        length_[b] += length;
    }

    std::span<const run> bucket(symbol_t b) const { return {runs_.data() + offsets_[b], fill_[b]}; }
    size_type filled_length(symbol_t b) const { return length_[b]; }
    size_type bucket_count() const { return fill_.empty() ? 0 : fill_.size() - 1; }
    size_type run_count() const { return runs_.size(); }

private:
    std::vector<size_type> offsets_;
    std::vector<run> runs_;
    std::vector<size_type> fill_;
    std::vector<size_type> length_;
};

// Second pass over BWT^{i+1}: fills the buckets and writes every run of
// BWT^{i+1} again with its symbol replaced by the terminal of its chain.
template <class Source, class Sink>
induction_buckets induce(Source& bwt_next, const compressed_dict& cd, const bucket_plan& plan, chain_cache& chains,
                         Sink& transformed) {
    induction_buckets buckets(plan);
    run r;
    while (bwt_next.next(r)) {
        if (cd.proper_suffix[r.symbol]) buckets.append(r.symbol, dummy_symbol, r.length);
        for (const auto& l : chains.links(r.symbol)) buckets.append(l.bucket, l.left, r.length);
        transformed.append_run(chains.terminal(r.symbol), r.length);
    }
    return buckets;
}

namespace detail {

// Hands out a prefix of a run stream, splitting runs as needed.
template <class Source>
class run_taker {
public:
    explicit run_taker(Source& src) : src_(&src) {}

    template <class Sink>
    void take(size_type count, Sink& out) {
        while (count > 0) {
            if (pending_.length == 0 && !src_->next(pending_)) {
                throw corruption_error("transformed BWT exhausted before the merge finished");
            }
            const size_type n = std::min(count, pending_.length);
            out.append_run(pending_.symbol, n);
            pending_.length -= n;
            count -= n;
        }
    }

    bool exhausted() {
        if (pending_.length > 0) return false;
        return !src_->next(pending_);
    }

private:
    Source* src_;
    run pending_{};
};

}  // namespace detail

// Builds BWT^i from pBWT^i: filled runs are copied, the b-th EMPTY entry is
// served from the transformed BWT^{i+1} (V[b] = 0) or from bucket b, whose
// DUMMY runs are served from the transformed BWT^{i+1} in turn.
template <class PbwtSource, class TransformedSource, class Sink>
void merge(PbwtSource& pbwt, TransformedSource& transformed, const induction_buckets& buckets,
           const compressed_dict& cd, const bit_vector& occurs, Sink& out) {
    detail::run_taker<TransformedSource> from_next(transformed);
    symbol_t b = 0;
    run r;
    while (pbwt.next(r)) {
        if (r.symbol != dummy_symbol) {
            out.append_run(r.symbol, r.length);
            continue;
        }
        ++b;
        if (b > cd.sigma_next) throw corruption_error("pBWT has more EMPTY entries than ranks");
        if (!cd.proper_suffix[b]) {
            from_next.take(r.length, out);
            continue;
        }
        if (buckets.filled_length(b) != r.length) {
            throw corruption_error("bucket " + std::to_string(b) + " holds " + std::to_string(buckets.filled_length(b)) +
                                   " symbols, EMPTY entry expects " + std::to_string(r.length));
        }
        for (const auto& br : buckets.bucket(b)) {
            if (br.symbol == dummy_symbol) {
                if (!occurs[b]) throw corruption_error("bucket of an unparsed rank has dummy entries");
                from_next.take(br.length, out);
            } else {
                out.append_run(br.symbol, br.length);
            }
        }
    }
    if (b != cd.sigma_next) throw corruption_error("pBWT has fewer EMPTY entries than ranks");
    if (!from_next.exhausted()) throw corruption_error("transformed BWT not fully consumed by the merge");
}

struct induction_stats {
    size_type chain_steps = 0;
    size_type bucket_runs = 0;
};

// One in-memory induction round: BWT^{i+1} + compressed D^i + pBWT^i -> BWT^i.
run_sequence induce_round(const run_sequence& bwt_next, const compressed_dict& cd, const run_sequence& pbwt,
                          induction_stats* stats = nullptr);

}  // namespace grlbwt

#endif
