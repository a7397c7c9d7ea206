#ifndef GRLBWT_ALPHABET_TEXT_HPP
#define GRLBWT_ALPHABET_TEXT_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grlbwt/bit_vector.hpp"
#include "grlbwt/common.hpp"

namespace grlbwt {

struct string_collection {
    std::vector<std::string> strings;

    size_type size() const { return strings.size(); }
    bool operator==(const string_collection&) const = default;
};

// Dense byte <-> symbol map. Bytes occurring in the input get symbols
// 2..sigma in increasing byte order; 1 is the sentinel, 0 never maps to a byte.
class symbol_map {
public:
    symbol_map() { byte_to_symbol_.fill(0); }

    static symbol_map from_bytes(std::span<const std::uint8_t> present_bytes);

    symbol_t sigma() const { return static_cast<symbol_t>(symbol_to_byte_.size()) + 1; }
    symbol_t encode(std::uint8_t byte) const { return byte_to_symbol_[byte]; }
    bool contains(std::uint8_t byte) const { return byte_to_symbol_[byte] != 0; }
    std::uint8_t decode(symbol_t symbol) const;

    // Byte for every symbol in [2, sigma], in symbol order.
    const std::vector<std::uint8_t>& bytes() const { return symbol_to_byte_; }

    bool operator==(const symbol_map& o) const { return symbol_to_byte_ == o.symbol_to_byte_; }

private:
    std::array<symbol_t, 256> byte_to_symbol_{};
    std::vector<std::uint8_t> symbol_to_byte_;
};

// The text of one parsing round. suffix_flags is indexed by symbol (entry 0 is
// unused) and marks the symbols whose expansion ends a string of the collection.
struct text_level {
    size_type level = 1;
    std::vector<symbol_t> symbols;
    symbol_t sigma = 0;
    size_type k = 0;
    bit_vector suffix_flags;

    size_type size() const { return symbols.size(); }
};

std::pair<text_level, symbol_map> ingest(const string_collection& collection,
                                         std::uint8_t separator = '\n');

// Inverse of ingest on a level-1 text.
string_collection decode_text(std::span<const symbol_t> symbols, const symbol_map& map);

// Rank-ordered phrases of one round; symbol b of the next level expands to
// phrases[b - 1].
struct expansion_dictionary {
    std::vector<std::vector<symbol_t>> phrases;
};

// Level-1 expansion of a symbol valid at level dictionaries.size() + 1.
// Consecutive phrases inside one expansion share their boundary symbol.
std::vector<symbol_t> expand_symbol(std::span<const expansion_dictionary> level_stack,
                                    symbol_t symbol);

// Renders level-1 symbols as bytes, with the sentinel shown as sentinel_char.
std::string render(std::span<const symbol_t> symbols, const symbol_map& map,
                   char sentinel_char = '$');

}  // namespace grlbwt

#endif
