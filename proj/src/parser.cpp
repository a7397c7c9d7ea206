#include "grlbwt/parser.hpp"

#include <algorithm>

namespace grlbwt {

namespace {
bool marked(const bit_vector& marks, symbol_t s) { return s < marks.size() && marks[s]; }
}  // namespace

phrase_table scan_phrases(const text_level& text) {
    reverse_symbol_cursor cursor(text.symbols);
    return scan_phrases(cursor, text.suffix_flags);
}

dictionary build_dictionary(const phrase_table& table, const bit_vector& marks) {
    dictionary dict;
    dict.symbols.reserve(table.total_symbols());
    for (size_type id = 0; id < table.size(); ++id) {
        const auto p = table.phrase(id);
        dict.append_phrase(p, table.value(id), marked(marks, p.back()));
    }
    dict.finalize();
    return dict;
}

pbwt_result build_pbwt(const dictionary& dict, const generalized_sa& sa, const bit_vector& marks) {
    pbwt_result out;
    out.position_rank.assign(dict.symbols.size(), 0);

    const size_type n = sa.size();
    size_type j = 0;
    while (j < n) {
        size_type end = j + 1;
        while (end < n && !sa.range_start(end)) ++end;

        const size_type first_pos = sa.position(j);
        // length-1 suffixes repeat the first symbol of the next phrase, unless
        // that symbol ends a string (no phrase follows it)
        if (dict.is_phrase_end(first_pos) && !marked(marks, dict.symbols[first_pos])) {
            j = end;
            continue;
        }

        size_type length = 0;
        symbol_t left = dummy_symbol;
        bool undecided = false;
        bool have_left = false;
        std::optional<size_type> full;
        bool proper = false;
        for (size_type u = j; u < end; ++u) {
            const size_type p = sa.position(u);
            const size_type id = dict.phrase_of(p);
            length += dict.freqs[id];
            if (dict.is_phrase_start(p)) {
                full = id;
                undecided = true;
            } else {
                proper = true;
                const symbol_t s = dict.symbols[p - 1];
                if (!have_left) {
                    left = s;
                    have_left = true;
                } else if (s != left) {
                    undecided = true;
                }
            }
        }

        if (!undecided) {
            out.pbwt.append_run(left, length);
        } else {
            const symbol_t rank = out.empties.size() + 1;
            out.empties.push_back({length, first_pos, full, false, proper});
            out.pbwt.append_separate(dummy_symbol, length);
            for (size_type u = j; u < end; ++u) out.position_rank[sa.position(u)] = rank;
        }
        j = end;
    }
    return out;
}

void expand_dictionary(dictionary& dict, pbwt_result& pbwt, const bit_vector& marks) {
    std::vector<std::pair<empty_entry*, size_type>> pending;
    for (auto& e : pbwt.empties) {
        if (!e.phrase) pending.emplace_back(&e, dict.starts[dict.phrase_of(e.source_pos) + 1]);
    }
    for (auto [e, host_end] : pending) {
        std::vector<symbol_t> s(dict.symbols.begin() + static_cast<std::ptrdiff_t>(e->source_pos),
                                dict.symbols.begin() + static_cast<std::ptrdiff_t>(host_end));
        e->phrase = dict.phrase_count();
        e->expanded = true;
        dict.append_phrase(s, 0, marked(marks, s.back()));
    }
    dict.finalize();
}

phrase_ranking rank_phrases(const dictionary& dict, const pbwt_result& pbwt, phrase_table& table) {
    phrase_ranking r;
    const symbol_t sigma_next = pbwt.empty_count();
    r.rank_of_phrase.assign(dict.phrase_count(), 0);
    r.phrase_of_rank.resize(sigma_next);
    r.proper_suffix = bit_vector(sigma_next + 1);
    r.next_marks = bit_vector(sigma_next + 1);
    for (symbol_t b = 1; b <= sigma_next; ++b) {
        const auto& e = pbwt.empties[b - 1];
        if (!e.phrase) throw corruption_error("EMPTY entry without a phrase; expand the dictionary first");
        r.rank_of_phrase[*e.phrase] = b;
        r.phrase_of_rank[b - 1] = *e.phrase;
        if (e.proper_suffix) r.proper_suffix.set(b);
        if (dict.suffix_of_text[*e.phrase]) r.next_marks.set(b);
    }
    for (size_type id = 0; id < table.size(); ++id) {
        if (r.rank_of_phrase[id] == 0) {
            throw corruption_error("phrase " + std::to_string(id) + " did not produce an EMPTY entry");
        }
        table.set_value(id, r.rank_of_phrase[id]);
    }
    return r;
}

expansion_dictionary rank_ordered_phrases(const dictionary& dict, const phrase_ranking& ranking) {
    expansion_dictionary out;
    out.phrases.reserve(ranking.phrase_of_rank.size());
    for (auto id : ranking.phrase_of_rank) {
        const auto p = dict.phrase(id);
        out.phrases.emplace_back(p.begin(), p.end());
    }
    return out;
}

compressed_dict compress_dictionary(const dictionary& dict, const phrase_ranking& ranking,
                                    const pbwt_result& pbwt, const bit_vector& marks, symbol_t sigma) {
    compressed_dict cd;
    cd.sigma = sigma;
    cd.sigma_next = pbwt.empty_count();
    cd.pairs.assign(cd.sigma_next + 1, compressed_pair{});
    cd.proper_suffix = ranking.proper_suffix;
    cd.suffix_of_text = ranking.next_marks;

    for (symbol_t b = 1; b <= cd.sigma_next; ++b) {
        const auto& e = pbwt.empties[b - 1];
        // expanded strings have no ranked copy of their own suffix positions;
        // the suffix positions inside their host phrase carry the ranks
        size_type begin = 0;
        size_type end = 0;
        if (e.expanded) {
            begin = e.source_pos;
            end = dict.starts[dict.phrase_of(e.source_pos) + 1];
        } else {
            begin = dict.starts[*e.phrase];
            end = dict.starts[*e.phrase + 1];
        }

        compressed_pair pair;
        for (size_type u = begin + 1; u < end; ++u) {
            if (pbwt.position_rank[u] != 0) {
                pair = {dict.symbols[u - 1], pbwt.position_rank[u], true};
                break;
            }
        }
        if (!pair.next_is_rank) {
            const symbol_t last = dict.symbols[end - 1];
            if (marked(marks, last)) {
                pair = {dummy_symbol, last, false};
            } else if (end - begin >= 2) {
                pair = {dummy_symbol, dict.symbols[end - 2], false};
            } else {
                throw corruption_error("single-symbol string without a string boundary was ranked");
            }
        }
        cd.pairs[b] = pair;
    }
    return cd;
}

text_level build_parse(const text_level& text, const phrase_table& ranked, const phrase_ranking& ranking) {
    text_level next;
    next.level = text.level + 1;
    next.k = text.k;
    next.sigma = ranking.phrase_of_rank.size();
    next.suffix_flags = ranking.next_marks;
    reverse_symbol_cursor cursor(text.symbols);
    emit_parse(cursor, text.suffix_flags, ranked, [&](symbol_t r) { next.symbols.push_back(r); });
    std::reverse(next.symbols.begin(), next.symbols.end());
    return next;
}

round_result parse_round(const text_level& text) {
    round_result r;
    r.table = scan_phrases(text);
    r.dict = build_dictionary(r.table, text.suffix_flags);
    r.sa = build_generalized_sa(r.dict, text.sigma);
    r.pbwt = build_pbwt(r.dict, r.sa, text.suffix_flags);
    r.expanded = r.dict;
    expand_dictionary(r.expanded, r.pbwt, text.suffix_flags);
    r.ranking = rank_phrases(r.expanded, r.pbwt, r.table);
    r.cdict = compress_dictionary(r.expanded, r.ranking, r.pbwt, text.suffix_flags, text.sigma);
    r.next = build_parse(text, r.table, r.ranking);
    r.final = r.next.size() == text.k;
    return r;
}

}  // namespace grlbwt
