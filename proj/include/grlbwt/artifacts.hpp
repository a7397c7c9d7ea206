#ifndef GRLBWT_ARTIFACTS_HPP
#define GRLBWT_ARTIFACTS_HPP

#include <filesystem>

#include "grlbwt/dictionary.hpp"
#include "grlbwt/streams.hpp"

namespace grlbwt {

// Round artifacts besides the run and symbol files. Layouts are in
// docs/formats.md.
void write_compressed_dict(const std::filesystem::path& path, const compressed_dict& cd, size_type buffer_bytes,
                           buffer_meter* meter = nullptr);
compressed_dict read_compressed_dict(const std::filesystem::path& path, size_type buffer_bytes,
                                     buffer_meter* meter = nullptr);

void write_phrase_table(const std::filesystem::path& path, const phrase_table& table, size_type buffer_bytes,
                        buffer_meter* meter = nullptr);
phrase_table read_phrase_table(const std::filesystem::path& path, size_type buffer_bytes,
                               buffer_meter* meter = nullptr);

}  // namespace grlbwt

#endif
