#include "grlbwt/pipeline.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>

#include "grlbwt/artifacts.hpp"
#include "grlbwt/inducer.hpp"
#include "grlbwt/iss_core.hpp"
#include "grlbwt/streams.hpp"

namespace grlbwt {

namespace fs = std::filesystem;

namespace {

fs::path temp_base(const pipeline_config& config) {
    if (!config.tmp_dir.empty()) return config.tmp_dir;
    if (const char* env = std::getenv("GRLBWT_TMPDIR"); env && *env) return env;
    return fs::temp_directory_path();
}

// Owns {tmp}/{run-id}; removes it on scope exit unless asked to keep it.
class run_directory {
public:
    run_directory(const fs::path& base, bool keep) : keep_(keep) {
        static std::atomic<unsigned> counter{0};
        path_ = base / ("grlbwt-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::error_code ec;
        fs::create_directories(path_, ec);
        if (ec) throw io_error("cannot create temp directory " + path_.string() + ": " + ec.message());
    }
    ~run_directory() {
        if (keep_) return;
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    fs::path file(size_type level, const char* kind) const {
        return path_ / ("round" + std::to_string(level) + "." + kind);
    }
    const fs::path& path() const { return path_; }
    void drop(const fs::path& p) const {
        if (keep_) return;
        std::error_code ec;
        fs::remove(p, ec);
    }

private:
    fs::path path_;
    bool keep_;
};

// Rethrows with the round in the message, keeping the error category.
template <class F>
auto in_round(const char* phase, size_type level, F&& f) {
    const std::string where = std::string(phase) + " round " + std::to_string(level) + ": ";
    try {
        return f();
    } catch (const input_error& e) {
        throw input_error(where + e.what());
    } catch (const corruption_error& e) {
        throw corruption_error(where + e.what());
    } catch (const io_error& e) {
        throw io_error(where + e.what());
    } catch (const error& e) {
        throw error(where + e.what());
    }
}

struct level_state {
    size_type level;
    size_type n;
    symbol_t sigma;
    bit_vector marks;
    fs::path text;  // reversed T^level
};

level_state write_first_level(const string_collection& collection, const pipeline_config& config,
                              const run_directory& dir, buffer_meter& meter, symbol_map& map) {
    auto [text, m] = ingest(collection, config.separator);
    map = m;
    level_state st{1, text.size(), text.sigma, text.suffix_flags, dir.file(1, "text")};
    symbol_file_writer w(st.text, text.sigma, config.buffer_bytes, &meter);
    for (size_type j = text.size(); j-- > 0;) w.push(text.symbols[j]);
    w.close();
    return st;
}

// One parsing round on disk. Returns the next level and fills `stats`.
level_state parse_level(const level_state& cur, const pipeline_config& config, const run_directory& dir,
                        buffer_meter& meter, level_stats& stats) {
    using dir_t = symbol_file_reader::direction;
    phrase_table table;
    {
        symbol_file_reader rd(cur.text, dir_t::forward, config.buffer_bytes, &meter);
        table = scan_phrases(rd, cur.marks);
    }
    dictionary dict = build_dictionary(table, cur.marks);
    pbwt_result pbwt;
    {
        const generalized_sa sa = build_generalized_sa(dict, cur.sigma);
        pbwt = build_pbwt(dict, sa, cur.marks);
    }
    if (pbwt.pbwt.total() != cur.n) {
        throw corruption_error("pBWT covers " + std::to_string(pbwt.pbwt.total()) + " positions, text has " +
                               std::to_string(cur.n));
    }
    write_run_file(dir.file(cur.level, "pbwt"), pbwt.pbwt, config.buffer_bytes, &meter);

    expand_dictionary(dict, pbwt, cur.marks);
    const phrase_ranking ranking = rank_phrases(dict, pbwt, table);
    const compressed_dict cdict = compress_dictionary(dict, ranking, pbwt, cur.marks, cur.sigma);
    write_compressed_dict(dir.file(cur.level, "cdict"), cdict, config.buffer_bytes, &meter);
    write_phrase_table(dir.file(cur.level, "phrases"), table, config.buffer_bytes, &meter);

    stats.phrases = dict.phrase_count();
    stats.dict_symbols = dict.symbols.size();
    stats.pbwt_runs = pbwt.pbwt.run_count();
    stats.empty_entries = pbwt.empty_count();
    stats.cdict_bytes = cdict.byte_size();
    if (config.on_parse) config.on_parse({cur.level, cur.n, cur.sigma, table, dict, pbwt, ranking, cdict});

    level_state next{cur.level + 1, 0, cdict.sigma_next, ranking.next_marks, dir.file(cur.level + 1, "text")};
    {
        symbol_file_reader rd(cur.text, dir_t::forward, config.buffer_bytes, &meter);
        symbol_file_writer w(next.text, next.sigma, config.buffer_bytes, &meter);
        next.n = emit_parse(rd, cur.marks, table, [&](symbol_t s) { w.push(s); });
        w.close();
    }
    if (next.n >= cur.n) throw corruption_error("parse did not shrink the text");
    return next;
}

// One induction round: BWT^{level+1} -> BWT^level.
void induce_level(size_type level, size_type n, const pipeline_config& config, const run_directory& dir,
                  buffer_meter& meter, level_stats& stats) {
    const compressed_dict cdict = read_compressed_dict(dir.file(level, "cdict"), config.buffer_bytes, &meter);
    const fs::path next_bwt = dir.file(level + 1, "bwt");
    const fs::path pbwt_path = dir.file(level, "pbwt");
    const fs::path transformed_path = dir.file(level, "transformed");

    std::vector<size_type> capacity;
    {
        run_file_reader pbwt(pbwt_path, config.buffer_bytes, &meter);
        capacity = empty_lengths(pbwt);
    }
    chain_cache chains(cdict);
    bucket_plan plan;
    {
        run_file_reader bwt(next_bwt, config.buffer_bytes, &meter);
        plan = size_buckets(bwt, cdict, std::move(capacity), chains);
    }
    induction_buckets buckets;
    {
        run_file_reader bwt(next_bwt, config.buffer_bytes, &meter);
        run_file_writer transformed(transformed_path, config.buffer_bytes, &meter);
        buckets = induce(bwt, cdict, plan, chains, transformed);
        transformed.close();
    }
    run_file_writer out(dir.file(level, "bwt"), config.buffer_bytes, &meter);
    {
        run_file_reader pbwt(pbwt_path, config.buffer_bytes, &meter);
        run_file_reader transformed(transformed_path, config.buffer_bytes, &meter);
        merge(pbwt, transformed, buckets, cdict, plan.occurs, out);
    }
    out.close();
    if (out.total() != n) {
        throw corruption_error("BWT has " + std::to_string(out.total()) + " symbols, expected " + std::to_string(n));
    }
    stats.bwt_runs = out.run_count();
    stats.chain_steps = chains.steps();
    if (config.on_induce) config.on_induce({level, n, out.total(), out.run_count(), chains.steps(), buckets.run_count()});
    dir.drop(next_bwt);
    dir.drop(transformed_path);
}

}  // namespace

build_result grl_bwt(const string_collection& collection, const pipeline_config& config) {
    if (config.buffer_bytes == 0) throw input_error("buffer size must be positive");
    build_result result;
    buffer_meter meter;
    run_directory dir(temp_base(config), config.keep_temp);
    auto& st = result.stats;
    st.run_dir = dir.path();
    st.k = collection.size();

    std::vector<level_state> levels;
    levels.push_back(write_first_level(collection, config, dir, meter, result.map));
    st.n = levels.back().n;
    while (true) {
        level_state& cur = levels.back();
        st.levels.push_back({cur.level, cur.n, cur.sigma});
        if (cur.n == st.k) break;
        level_state next = in_round("parsing", cur.level, [&] { return parse_level(cur, config, dir, meter, st.levels.back()); });
        dir.drop(cur.text);
        levels.push_back(std::move(next));
    }
    st.h = levels.size();

    // BWT^h is T^h itself; the reversed file read backwards gives T^h
    in_round("induction", st.h, [&] {
        const level_state& top = levels.back();
        symbol_file_reader rd(top.text, symbol_file_reader::direction::backward, config.buffer_bytes, &meter);
        if (top.n != st.k) throw error("final level has " + std::to_string(top.n) + " symbols for " + std::to_string(st.k) + " strings");
        run_file_writer base(dir.file(top.level, "bwt"), config.buffer_bytes, &meter);
        symbol_t s = 0;
        while (rd.next(s)) base.append_run(s, 1);
        base.close();
        st.levels.back().bwt_runs = base.run_count();
    });
    dir.drop(levels.back().text);

    for (size_type level = st.h - 1; level >= 1; --level) {
        in_round("induction", level,
                 [&] { induce_level(level, levels[level - 1].n, config, dir, meter, st.levels[level - 1]); });
    }

    result.bwt = in_round("induction", 1, [&] {
        run_file_reader rd(dir.file(1, "bwt"), config.buffer_bytes, &meter);
        run_sequence bwt;
        run r;
        while (rd.next(r)) bwt.append_run(r);
        return bwt;
    });
    st.r = result.bwt.run_count();
    st.peak_buffer_bytes = meter.peak();
    return result;
}

pipeline_stats collection_stats(const string_collection& collection, const pipeline_config& config) {
    return grl_bwt(collection, config).stats;
}

}  // namespace grlbwt
