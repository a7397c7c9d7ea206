#include "grlbwt/iss_core.hpp"

#include <algorithm>
#include <limits>

namespace grlbwt {

std::vector<suffix_type> classify(std::span<const symbol_t> symbols, const bit_vector& boundary_marks) {
    std::vector<suffix_type> types(symbols.size(), suffix_type::S);
    if (symbols.empty()) return types;

    auto is_end = [&](size_type j) {
        const symbol_t s = symbols[j];
        return s < boundary_marks.size() && boundary_marks[s];
    };

    const size_type n = symbols.size();
    for (size_type j = n; j-- > 0;) {
        if (j + 1 == n || is_end(j)) {
            types[j] = suffix_type::S;
        } else if (symbols[j] < symbols[j + 1]) {
            types[j] = suffix_type::S;
        } else if (symbols[j] > symbols[j + 1]) {
            types[j] = suffix_type::L;
        } else {
            types[j] = types[j + 1] == suffix_type::L ? suffix_type::L : suffix_type::S;
        }
    }
    for (size_type j = 1; j < n; ++j) {
        if (types[j] == suffix_type::S && types[j - 1] == suffix_type::L && !is_end(j - 1)) {
            types[j] = suffix_type::LMS;
        }
    }
    return types;
}

std::strong_ordering lms_compare(std::span<const symbol_t> x, std::span<const symbol_t> y,
                                 size_type x_phrase, size_type y_phrase) {
    const size_type m = std::min(x.size(), y.size());
    for (size_type j = 0; j < m; ++j) {
        if (x[j] != y[j]) return x[j] <=> y[j];
    }
    if (x.size() != y.size()) {
        // the shorter string is a proper prefix and ranks higher
        return x.size() < y.size() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return x_phrase <=> y_phrase;
}

namespace {

constexpr size_type empty_slot = std::numeric_limits<size_type>::max();

// Per-position L/S types, computed phrase by phrase: the last symbol of a
// phrase is S-type, the rest follow the usual right-to-left rule.
std::vector<bool> phrase_types(const dictionary& dict) {
    std::vector<bool> is_s(dict.symbols.size(), true);
    for (size_type id = 0; id < dict.phrase_count(); ++id) {
        const size_type b = dict.starts[id];
        const size_type e = dict.starts[id + 1];
        for (size_type j = e - 1; j-- > b;) {
            const symbol_t cur = dict.symbols[j];
            const symbol_t nxt = dict.symbols[j + 1];
            is_s[j] = cur < nxt || (cur == nxt && is_s[j + 1]);
        }
    }
    return is_s;
}

}  // namespace

generalized_sa build_generalized_sa(const dictionary& dict, symbol_t sigma) {
    const auto& r = dict.symbols;
    const size_type n = r.size();
    std::vector<size_type> sa(n, empty_slot);
    if (n == 0) return generalized_sa{};

    const std::vector<bool> is_s = phrase_types(dict);

    // bucket boundaries and the number of phrase-final symbols per bucket
    std::vector<size_type> bucket_start(sigma + 2, 0);
    std::vector<size_type> seeds(sigma + 1, 0);
    for (size_type j = 0; j < n; ++j) {
        if (r[j] > sigma) throw corruption_error("dictionary symbol exceeds the alphabet");
        ++bucket_start[r[j] + 1];
    }
    for (symbol_t c = 1; c <= sigma + 1; ++c) bucket_start[c] += bucket_start[c - 1];
    for (size_type id = 0; id < dict.phrase_count(); ++id) ++seeds[r[dict.starts[id + 1] - 1]];

    // 1) seeds, in phrase order, at the tail of their buckets; the first seed
    //    of a bucket opens a range (all seeds of a bucket are equal strings)
    std::vector<size_type> cursor(sigma + 1);
    for (symbol_t c = 0; c <= sigma; ++c) cursor[c] = bucket_start[c + 1] - seeds[c];
    for (size_type id = 0; id < dict.phrase_count(); ++id) {
        const size_type pos = dict.starts[id + 1] - 1;
        const symbol_t c = r[pos];
        const bool first = cursor[c] == bucket_start[c + 1] - seeds[c];
        sa[cursor[c]++] = (pos << 1) | (first ? 1U : 0U);
    }

    // 2) L-type suffixes, left to right from the bucket heads. An induced entry
    //    opens a range unless the previous entry placed in the same bucket came
    //    from the same inducing range.
    constexpr size_type no_range = empty_slot;
    std::vector<size_type> last_range(sigma + 1, no_range);
    for (symbol_t c = 0; c <= sigma; ++c) cursor[c] = bucket_start[c];
    size_type range_id = 0;
    for (size_type j = 0; j < n; ++j) {
        if (sa[j] == empty_slot) continue;
        if (sa[j] & 1U) ++range_id;
        const size_type p = sa[j] >> 1;
        if (dict.is_phrase_start(p) || is_s[p - 1]) continue;
        const symbol_t c = r[p - 1];
        const bool opens = last_range[c] != range_id;
        last_range[c] = range_id;
        sa[cursor[c]++] = ((p - 1) << 1) | (opens ? 1U : 0U);
    }

    // 3) S-type suffixes, right to left, into the slots left of the seeds. The
    //    new entry tentatively opens a range; if it continues the range of the
    //    entry placed just right of it, that entry's flag is cleared.
    std::fill(last_range.begin(), last_range.end(), no_range);
    for (symbol_t c = 0; c <= sigma; ++c) cursor[c] = bucket_start[c + 1] - seeds[c];
    range_id = 0;
    for (size_type j = n; j-- > 0;) {
        if (j + 1 < n && (sa[j + 1] & 1U)) ++range_id;
        if (sa[j] == empty_slot) throw corruption_error("generalized suffix array has unfilled slots");
        const size_type p = sa[j] >> 1;
        if (dict.is_phrase_start(p) || !is_s[p - 1]) continue;
        const symbol_t c = r[p - 1];
        const size_type slot = --cursor[c];
        sa[slot] = ((p - 1) << 1) | 1U;
        if (last_range[c] == range_id) sa[slot + 1] &= ~size_type{1};
        last_range[c] = range_id;
    }

    return generalized_sa(std::move(sa));
}

}  // namespace grlbwt
