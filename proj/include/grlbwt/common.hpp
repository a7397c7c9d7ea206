#ifndef GRLBWT_COMMON_HPP
#define GRLBWT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grlbwt {

using symbol_t = std::uint64_t;
using size_type = std::uint64_t;

// Symbol 0 marks EMPTY pBWT entries, DUMMY induction slots and the
// placeholder left context of terminal pairs. Symbol 1 is the sentinel.
inline constexpr symbol_t dummy_symbol = 0;
inline constexpr symbol_t sentinel_symbol = 1;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input (collections, files, flags).
struct input_error : error {
    using error::error;
};

// An internal consistency check failed; an artifact is damaged or two
// passes disagree.
struct corruption_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

}  // namespace grlbwt

#endif
