#ifndef GRLBWT_PARSER_HPP
#define GRLBWT_PARSER_HPP

#include <optional>
#include <span>
#include <vector>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/bit_vector.hpp"
#include "grlbwt/common.hpp"
#include "grlbwt/dictionary.hpp"
#include "grlbwt/iss_core.hpp"
#include "grlbwt/rle.hpp"

namespace grlbwt {

// Reads an in-memory text from its last symbol to its first.
class reverse_symbol_cursor {
public:
    explicit reverse_symbol_cursor(std::span<const symbol_t> symbols) : symbols_(symbols), pos_(symbols.size()) {}
    bool prev(symbol_t& out) {
        if (pos_ == 0) return false;
        out = symbols_[--pos_];
        return true;
    }

private:
    std::span<const symbol_t> symbols_;
    size_type pos_;
};

// Walks a text right to left and reports its phrases (left-to-right content)
// in right-to-left order. Phrases are the LMS substrings, cut at every symbol
// flagged in marks: such a symbol closes the phrase of the string it ends and
// the phrase to its right (the first phrase of the next string) is emitted as is.
template <class Source, class Emit>
void for_each_phrase(Source& source, const bit_vector& marks, Emit&& emit) {
    std::vector<symbol_t> active;  // reversed
    std::vector<symbol_t> phrase;
    auto flush = [&] {
        phrase.assign(active.rbegin(), active.rend());
        emit(std::span<const symbol_t>(phrase));
    };

    symbol_t sym = 0;
    symbol_t prev = 0;
    bool prev_s = true;
    bool prev_ends = false;
    bool first = true;
    while (source.prev(sym)) {
        const bool ends = sym < marks.size() && marks[sym];
        if (first && !ends) throw corruption_error("text does not end with a string boundary");
        first = false;
        if (ends) {
            if (!active.empty()) flush();
            active.assign(1, sym);
            prev = sym;
            prev_s = true;
            prev_ends = true;
            continue;
        }
        const bool cur_s = sym < prev || (sym == prev && prev_s);
        if (!cur_s && prev_s && !prev_ends) {
            // the position to the right is LMS; phrases overlap on it
            flush();
            active.assign(1, prev);
        }
        active.push_back(sym);
        prev = sym;
        prev_s = cur_s;
        prev_ends = false;
    }
    if (!active.empty()) flush();
}

template <class Source>
phrase_table scan_phrases(Source& source, const bit_vector& marks) {
    phrase_table table;
    for_each_phrase(source, marks, [&](std::span<const symbol_t> p) { table.add_occurrence(p); });
    return table;
}

phrase_table scan_phrases(const text_level& text);

dictionary build_dictionary(const phrase_table& table, const bit_vector& marks);

struct empty_entry {
    size_type length = 0;
    size_type source_pos = 0;                // position in R of one suffix of the range
    std::optional<size_type> phrase;          // phrase id holding this string, once known
    bool expanded = false;                    // phrase was appended by expand_dictionary
    bool proper_suffix = false;               // the string occurs as a proper suffix (V)
};

struct pbwt_result {
    run_sequence pbwt;
    std::vector<empty_entry> empties;         // entry b - 1 describes rank b
    std::vector<symbol_t> position_rank;      // rank of the EMPTY range holding each R position, else 0

    symbol_t empty_count() const { return empties.size(); }
};

pbwt_result build_pbwt(const dictionary& dict, const generalized_sa& sa, const bit_vector& marks);

// Appends every EMPTY string that is not already a phrase.
void expand_dictionary(dictionary& dict, pbwt_result& pbwt, const bit_vector& marks);

struct phrase_ranking {
    std::vector<symbol_t> rank_of_phrase;     // per phrase id, 0 if unranked
    std::vector<size_type> phrase_of_rank;    // index b - 1
    bit_vector proper_suffix;                 // V, indexed by rank
    bit_vector next_marks;                    // B of the next level, indexed by rank
};

// Assigns ranks (the ordinal of each EMPTY entry) and rewrites the table values
// from frequencies to ranks.
phrase_ranking rank_phrases(const dictionary& dict, const pbwt_result& pbwt, phrase_table& table);

// Phrases in rank order, as used for expansion.
expansion_dictionary rank_ordered_phrases(const dictionary& dict, const phrase_ranking& ranking);

// Replaces every ranked string by (left context, rank of its longest proper
// suffix that is itself ranked), or by (dummy, terminal) when there is none.
compressed_dict compress_dictionary(const dictionary& dict, const phrase_ranking& ranking,
                                    const pbwt_result& pbwt, const bit_vector& marks, symbol_t sigma);

// Emits the ranks of the phrase occurrences right to left through push(rank).
template <class Source, class Push>
size_type emit_parse(Source& source, const bit_vector& marks, const phrase_table& ranked, Push&& push) {
    size_type count = 0;
    for_each_phrase(source, marks, [&](std::span<const symbol_t> p) {
        auto id = ranked.find(p);
        if (!id) throw corruption_error("phrase missing from the table while building the parse");
        push(static_cast<symbol_t>(ranked.value(*id)));
        ++count;
    });
    return count;
}

text_level build_parse(const text_level& text, const phrase_table& ranked, const phrase_ranking& ranking);

// All artifacts of one in-memory parsing round.
struct round_result {
    phrase_table table;
    dictionary dict;          // before expansion
    generalized_sa sa;
    pbwt_result pbwt;
    dictionary expanded;
    phrase_ranking ranking;
    compressed_dict cdict;
    text_level next;
    bool final = false;
};

round_result parse_round(const text_level& text);

}  // namespace grlbwt

#endif
