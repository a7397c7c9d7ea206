#include "grlbwt/alphabet_text.hpp"

namespace grlbwt {

symbol_map symbol_map::from_bytes(std::span<const std::uint8_t> present_bytes) {
    std::array<bool, 256> seen{};
    for (auto b : present_bytes) seen[b] = true;
    symbol_map map;
    for (unsigned b = 0; b < 256; ++b) {
        if (!seen[b]) continue;
        map.symbol_to_byte_.push_back(static_cast<std::uint8_t>(b));
        map.byte_to_symbol_[b] = static_cast<symbol_t>(map.symbol_to_byte_.size()) + 1;
    }
    return map;
}

std::uint8_t symbol_map::decode(symbol_t symbol) const {
    if (symbol < 2 || symbol > sigma()) {
        throw error("symbol " + std::to_string(symbol) + " has no byte");
    }
    return symbol_to_byte_[symbol - 2];
}

std::pair<text_level, symbol_map> ingest(const string_collection& collection, std::uint8_t separator) {
    if (collection.strings.empty()) throw input_error("empty collection");

    std::array<bool, 256> seen{};
    size_type n = 0;
    for (size_type u = 0; u < collection.size(); ++u) {
        const auto& s = collection.strings[u];
        if (s.empty()) throw input_error("string " + std::to_string(u) + " is empty");
        for (size_type j = 0; j < s.size(); ++j) {
            auto b = static_cast<std::uint8_t>(s[j]);
            if (b == separator) {
                throw input_error("string " + std::to_string(u) + " contains the separator byte at offset " +
                                  std::to_string(j));
            }
            seen[b] = true;
        }
        n += s.size() + 1;
    }

    std::vector<std::uint8_t> present;
    for (unsigned b = 0; b < 256; ++b) {
        if (seen[b]) present.push_back(static_cast<std::uint8_t>(b));
    }
    symbol_map map = symbol_map::from_bytes(present);

    text_level text;
    text.level = 1;
    text.k = collection.size();
    text.sigma = map.sigma();
    text.symbols.reserve(n);
    for (const auto& s : collection.strings) {
        for (char c : s) text.symbols.push_back(map.encode(static_cast<std::uint8_t>(c)));
        text.symbols.push_back(sentinel_symbol);
    }
    text.suffix_flags = bit_vector(text.sigma + 1);
    text.suffix_flags.set(sentinel_symbol);
    return {std::move(text), std::move(map)};
}

string_collection decode_text(std::span<const symbol_t> symbols, const symbol_map& map) {
    string_collection out;
    std::string cur;
    for (auto s : symbols) {
        if (s == sentinel_symbol) {
            out.strings.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(static_cast<char>(map.decode(s)));
        }
    }
    if (!cur.empty()) throw error("text does not end with a sentinel");
    return out;
}

std::vector<symbol_t> expand_symbol(std::span<const expansion_dictionary> level_stack, symbol_t symbol) {
    std::vector<symbol_t> seq{symbol};
    for (size_type lvl = level_stack.size(); lvl-- > 0;) {
        const auto& dict = level_stack[lvl].phrases;
        std::vector<symbol_t> next;
        for (size_type j = 0; j < seq.size(); ++j) {
            const symbol_t s = seq[j];
            if (s == 0 || s > dict.size()) {
                throw error("symbol " + std::to_string(s) + " out of range at level " + std::to_string(lvl + 2));
            }
            const auto& phrase = dict[s - 1];
            // phrases inside one expansion overlap by their boundary symbol
            next.insert(next.end(), phrase.begin() + (j == 0 ? 0 : 1), phrase.end());
        }
        seq = std::move(next);
    }
    return seq;
}

std::string render(std::span<const symbol_t> symbols, const symbol_map& map, char sentinel_char) {
    std::string out;
    out.reserve(symbols.size());
    for (auto s : symbols) {
        out.push_back(s == sentinel_symbol ? sentinel_char : static_cast<char>(map.decode(s)));
    }
    return out;
}

}  // namespace grlbwt
