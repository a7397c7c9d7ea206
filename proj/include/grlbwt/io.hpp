#ifndef GRLBWT_IO_HPP
#define GRLBWT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/rle.hpp"

namespace grlbwt {

enum class input_format { lines, fasta, raw };

input_format parse_format(std::string_view name);

// lines: one string per '\n'-terminated line (the last newline is optional).
// fasta: one string per record, header lines dropped, sequence lines joined.
// raw: records split on separator (a trailing separator is optional).
// Bytes are kept as they are; no case folding and no '\r' stripping outside fasta.
string_collection parse_input(std::string_view data, input_format format, std::uint8_t separator = '\n');
string_collection read_input(const std::filesystem::path& path, input_format format, std::uint8_t separator = '\n');

struct rlbwt {
    run_sequence runs;
    symbol_map map;
    size_type k = 0;
};

inline constexpr std::uint8_t rlbwt_version = 1;

void write_rlbwt(const run_sequence& seq, const symbol_map& map, const std::filesystem::path& path);
rlbwt read_rlbwt(const std::filesystem::path& path);

// LF inversion over runs; strings come back in collection order.
std::vector<std::vector<symbol_t>> invert_runs(const run_sequence& bwt, size_type k);
string_collection invert_rlbwt(const rlbwt& file);

// Writes every string followed by the terminator byte.
void write_collection(const string_collection& c, const std::filesystem::path& path, std::uint8_t terminator = '\n');

}  // namespace grlbwt

#endif
