#ifndef GRLBWT_PIPELINE_HPP
#define GRLBWT_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/dictionary.hpp"
#include "grlbwt/parser.hpp"
#include "grlbwt/rle.hpp"

namespace grlbwt {

// Passed to the parse hook after round `level` built its artifacts.
struct parse_event {
    size_type level;
    size_type n;            // |T^level|
    symbol_t sigma;
    const phrase_table& table;
    const dictionary& dict;  // expanded
    const pbwt_result& pbwt;
    const phrase_ranking& ranking;
    const compressed_dict& cdict;
};

// Passed to the induction hook once BWT^level is written.
struct induce_event {
    size_type level;
    size_type n;
    size_type bwt_total;
    size_type bwt_runs;
    size_type chain_steps;
    size_type bucket_runs;
};

struct pipeline_config {
    std::filesystem::path tmp_dir;  // empty: $GRLBWT_TMPDIR, else the system temp dir
    size_type buffer_bytes = size_type{8} << 20;
    bool keep_temp = false;
    std::uint8_t separator = '\n';
    std::function<void(const parse_event&)> on_parse;
    std::function<void(const induce_event&)> on_induce;
};

struct level_stats {
    size_type level = 0;
    size_type n = 0;
    symbol_t sigma = 0;
    size_type phrases = 0;       // including expanded ones
    size_type dict_symbols = 0;  // |R| after expansion
    size_type pbwt_runs = 0;
    size_type empty_entries = 0;
    size_type cdict_bytes = 0;
    size_type bwt_runs = 0;
    size_type chain_steps = 0;
};

struct pipeline_stats {
    std::vector<level_stats> levels;  // levels 1..h; level h has no dictionary
    size_type h = 0;
    size_type k = 0;
    size_type n = 0;
    size_type r = 0;
    size_type peak_buffer_bytes = 0;
    std::filesystem::path run_dir;
};

struct build_result {
    run_sequence bwt;
    symbol_map map;
    pipeline_stats stats;
};

build_result grl_bwt(const string_collection& collection, const pipeline_config& config = {});
pipeline_stats collection_stats(const string_collection& collection, const pipeline_config& config = {});

}  // namespace grlbwt

#endif
