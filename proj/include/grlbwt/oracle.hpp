#ifndef GRLBWT_ORACLE_HPP
#define GRLBWT_ORACLE_HPP

#include <span>
#include <string>
#include <vector>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/common.hpp"

namespace grlbwt {

// BCR BWT by sorting every suffix of every T_u$. Symbols follow the dense map
// of ingest(); ties between identical suffixes go by string index.
std::vector<symbol_t> bcr_bwt_naive(const string_collection& collection);

// Same, rendered as bytes with '$' for the sentinel.
std::string bcr_bwt_naive_string(const string_collection& collection);

// Spells the k strings back out of a BCR BWT by LF walks from rows 0..k-1.
// Strings come back as level-1 symbols without their sentinel.
std::vector<std::vector<symbol_t>> invert_bcr(std::span<const symbol_t> bwt, size_type k);

string_collection invert_bcr(std::span<const symbol_t> bwt, size_type k, const symbol_map& map);

}  // namespace grlbwt

#endif
