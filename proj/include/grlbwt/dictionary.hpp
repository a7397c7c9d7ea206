#ifndef GRLBWT_DICTIONARY_HPP
#define GRLBWT_DICTIONARY_HPP

#include <optional>
#include <span>
#include <vector>

#include "grlbwt/bit_vector.hpp"
#include "grlbwt/common.hpp"

namespace grlbwt {

// Hash table from phrase to a counter. The counter holds the phrase frequency
// while parsing and is later overwritten with the phrase rank. Phrase ids are
// assigned in insertion order and the phrases are stored back to back.
class phrase_table {
public:
    phrase_table();

    // Inserts the phrase with value 1 or increments its value. Returns its id.
    size_type add_occurrence(std::span<const symbol_t> phrase);
    std::optional<size_type> find(std::span<const symbol_t> phrase) const;

    size_type size() const { return values_.size(); }
    size_type total_symbols() const { return store_.size(); }

    std::span<const symbol_t> phrase(size_type id) const {
        return {store_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
    }
    size_type value(size_type id) const { return values_[id]; }
    void set_value(size_type id, size_type v) { values_[id] = v; }

    const std::vector<symbol_t>& store() const { return store_; }
    const std::vector<size_type>& offsets() const { return offsets_; }
    const std::vector<size_type>& values() const { return values_; }

    // Rebuilds a table from its serialized parts.
    static phrase_table from_parts(std::vector<symbol_t> store, std::vector<size_type> offsets,
                                   std::vector<size_type> values);

private:
    static std::uint64_t hash(std::span<const symbol_t> phrase);
    size_type probe(std::span<const symbol_t> phrase, std::uint64_t h) const;
    void grow();

    std::vector<symbol_t> store_;
    std::vector<size_type> offsets_;
    std::vector<size_type> values_;
    struct slot {
        size_type id = 0;  // phrase id + 1, 0 when free
        std::uint64_t hash = 0;
    };
    std::vector<slot> slots_;
    size_type mask_ = 0;
};

// Concatenated phrase store R with boundary bits L (rank-enabled), frequencies
// N and the per-phrase "ends a string of the collection" flag.
struct dictionary {
    std::vector<symbol_t> symbols;     // R
    bit_vector boundaries;             // L, one bit per symbol of R
    std::vector<size_type> starts;     // phrase start offsets, plus |R| at the end
    std::vector<size_type> freqs;      // N
    bit_vector suffix_of_text;         // per phrase

    size_type phrase_count() const { return freqs.size(); }
    size_type phrase_of(size_type pos) const { return boundaries.rank1(pos + 1) - 1; }
    bool is_phrase_start(size_type pos) const { return boundaries[pos]; }
    bool is_phrase_end(size_type pos) const { return pos + 1 == symbols.size() || boundaries[pos + 1]; }
    std::span<const symbol_t> phrase(size_type id) const {
        return {symbols.data() + starts[id], starts[id + 1] - starts[id]};
    }

    void append_phrase(std::span<const symbol_t> phrase, size_type freq, bool ends_string);
    void finalize() { boundaries.build_rank(); }
};

// One slot pair of the grammar-compressed dictionary. When next_is_rank the pair
// points to the longest left-maximal proper suffix (a rank of the next level)
// and left is the symbol preceding it. Otherwise next is a terminal symbol of
// the current level and left is the dummy symbol.
struct compressed_pair {
    symbol_t left = dummy_symbol;
    symbol_t next = 0;
    bool next_is_rank = false;

    bool operator==(const compressed_pair&) const = default;
};

// Rank-indexed compressed dictionary; index 0 is unused so ranks index directly.
struct compressed_dict {
    symbol_t sigma = 0;        // alphabet of the round being compressed
    symbol_t sigma_next = 0;   // number of ranks
    std::vector<compressed_pair> pairs;
    bit_vector proper_suffix;  // V
    bit_vector suffix_of_text;

    const compressed_pair& pair(symbol_t rank) const { return pairs[rank]; }
    size_type byte_size() const { return pairs.size() * 2 * sizeof(symbol_t); }
};

}  // namespace grlbwt

#endif
