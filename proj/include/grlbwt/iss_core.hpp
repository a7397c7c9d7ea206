#ifndef GRLBWT_ISS_CORE_HPP
#define GRLBWT_ISS_CORE_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "grlbwt/bit_vector.hpp"
#include "grlbwt/common.hpp"
#include "grlbwt/dictionary.hpp"

namespace grlbwt {

enum class suffix_type : std::uint8_t { L, S, LMS };

// Classifies a multi-string text right to left. A position whose symbol is set
// in boundary_marks ends its string: it is S-type, and the next position
// starts a new string, which is never LMS.
std::vector<suffix_type> classify(std::span<const symbol_t> symbols, const bit_vector& boundary_marks);

// Order of dictionary suffixes produced by induced sorting: symbolwise, a string
// ranks above every string it is a proper prefix of, and equal strings follow
// the order of their phrases.
std::strong_ordering lms_compare(std::span<const symbol_t> x, std::span<const symbol_t> y,
                                 size_type x_phrase, size_type y_phrase);

// Suffix array over all suffixes of the dictionary phrases. Entries are
// positions in R shifted left by one; the low bit flags the first entry of
// every range of equal suffix strings.
class generalized_sa {
public:
    generalized_sa() = default;
    explicit generalized_sa(std::vector<size_type> entries) : entries_(std::move(entries)) {}

    size_type size() const { return entries_.size(); }
    size_type position(size_type j) const { return entries_[j] >> 1; }
    bool range_start(size_type j) const { return entries_[j] & 1U; }
    const std::vector<size_type>& raw() const { return entries_; }

private:
    std::vector<size_type> entries_;
};

// Modified SA-IS: the last symbol of every phrase seeds the tail of its bucket,
// then one L pass and one S pass induce the rest. Phrase starts never induce.
generalized_sa build_generalized_sa(const dictionary& dict, symbol_t sigma);

}  // namespace grlbwt

#endif
