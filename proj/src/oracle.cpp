#include "grlbwt/oracle.hpp"

#include <algorithm>

namespace grlbwt {

std::vector<symbol_t> bcr_bwt_naive(const string_collection& collection) {
    const auto [text, map] = ingest(collection, 0);
    (void)map;
    std::vector<size_type> start_of;  // start of each string in text
    std::vector<std::pair<size_type, size_type>> suffixes;  // (string, position in text)
    size_type pos = 0;
    for (size_type u = 0; u < collection.size(); ++u) {
        start_of.push_back(pos);
        const size_type len = collection.strings[u].size() + 1;
        for (size_type j = 0; j < len; ++j) suffixes.emplace_back(u, pos + j);
        pos += len;
    }
    const auto& t = text.symbols;
    std::stable_sort(suffixes.begin(), suffixes.end(), [&](const auto& a, const auto& b) {
        size_type i = a.second;
        size_type j = b.second;
        while (true) {
            if (t[i] != t[j]) return t[i] < t[j];
            if (t[i] == sentinel_symbol) return a.first < b.first;
            ++i;
            ++j;
        }
    });
    std::vector<symbol_t> bwt;
    bwt.reserve(suffixes.size());
    for (const auto& [u, p] : suffixes) {
        bwt.push_back(p == start_of[u] ? sentinel_symbol : t[p - 1]);
    }
    return bwt;
}

std::string bcr_bwt_naive_string(const string_collection& collection) {
    auto [text, map] = ingest(collection, 0);
    (void)text;
    return render(bcr_bwt_naive(collection), map);
}

std::vector<std::vector<symbol_t>> invert_bcr(std::span<const symbol_t> bwt, size_type k) {
    const size_type n = bwt.size();
    symbol_t sigma = 0;
    for (auto s : bwt) sigma = std::max(sigma, s);
    std::vector<size_type> counts(sigma + 2, 0);
    for (auto s : bwt) {
        if (s == 0) throw error("BWT contains symbol 0");
        ++counts[s];
    }
    if (counts[sentinel_symbol] != k) {
        throw error("BWT has " + std::to_string(counts[sentinel_symbol]) + " sentinels, expected " + std::to_string(k));
    }
    std::vector<size_type> first(sigma + 2, 0);
    for (symbol_t c = 1; c <= sigma; ++c) first[c + 1] = first[c] + counts[c];
    std::vector<size_type> lf(n);
    std::vector<size_type> seen(sigma + 1, 0);
    for (size_type j = 0; j < n; ++j) lf[j] = first[bwt[j]] + seen[bwt[j]]++;

    std::vector<std::vector<symbol_t>> out(k);
    for (size_type u = 0; u < k; ++u) {
        size_type j = u;
        auto& s = out[u];
        while (bwt[j] != sentinel_symbol) {
            if (s.size() >= n) throw error("LF walk does not reach a sentinel");
            s.push_back(bwt[j]);
            j = lf[j];
        }
        std::reverse(s.begin(), s.end());
    }
    return out;
}

string_collection invert_bcr(std::span<const symbol_t> bwt, size_type k, const symbol_map& map) {
    string_collection out;
    for (const auto& s : invert_bcr(bwt, k)) {
        std::string str;
        for (auto c : s) str.push_back(static_cast<char>(map.decode(c)));
        out.strings.push_back(std::move(str));
    }
    return out;
}

}  // namespace grlbwt
