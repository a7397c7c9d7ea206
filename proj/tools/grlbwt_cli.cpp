#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "grlbwt/io.hpp"
#include "grlbwt/pipeline.hpp"

namespace {

using namespace grlbwt;

// Accepts a single character, an escape (\0 \n \t \r) or a number (10, 0x0a).
std::uint8_t parse_byte(const std::string& s) {
    if (s.size() == 1) return static_cast<std::uint8_t>(s[0]);
    if (s == "\\0") return 0;
    if (s == "\\n") return '\n';
    if (s == "\\t") return '\t';
    if (s == "\\r") return '\r';
    try {
        size_t used = 0;
        const unsigned long v = std::stoul(s, &used, 0);
        if (used == s.size() && v < 256) return static_cast<std::uint8_t>(v);
    } catch (const std::exception&) {
    }
    throw input_error("cannot read '" + s + "' as a byte");
}

void print_stats(std::ostream& os, const pipeline_stats& st) {
    os << "strings k        " << st.k << "\n";
    os << "length n         " << st.n << "\n";
    os << "levels h         " << st.h << "\n";
    os << "runs r           " << st.r << "\n";
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(2) << static_cast<double>(st.n) / static_cast<double>(st.r);
    os << "n/r              " << ratio.str() << "\n";
    os << "peak buffers     " << st.peak_buffer_bytes << " bytes\n";
    os << "level        n^i      sigma^i        |R^i|  pBWT runs   BWT runs  dict bytes  chain steps\n";
    for (const auto& l : st.levels) {
        os << std::setw(5) << l.level << std::setw(11) << l.n << std::setw(13) << l.sigma << std::setw(13)
           << l.dict_symbols << std::setw(11) << l.pbwt_runs << std::setw(11) << l.bwt_runs << std::setw(12)
           << l.cdict_bytes << std::setw(13) << l.chain_steps << "\n";
    }
}

struct input_options {
    std::string input;
    std::string format = "lines";
    std::string sep = "\\n";
    std::string tmp;
    std::size_t buffer_mb = 8;
};

void add_input_options(CLI::App* cmd, input_options& o) {
    cmd->add_option("input", o.input, "input file")->required();
    cmd->add_option("--format", o.format, "lines, fasta or raw")->check(CLI::IsMember({"lines", "fasta", "raw"}));
    cmd->add_option("--sep", o.sep, "record separator for raw input");
    cmd->add_option("--tmp", o.tmp, "directory for round artifacts (default $GRLBWT_TMPDIR)");
    cmd->add_option("--buffer-mb", o.buffer_mb, "stream buffer size per open file")->check(CLI::PositiveNumber);
}

std::pair<string_collection, pipeline_config> load(const input_options& o) {
    const input_format fmt = parse_format(o.format);
    const std::uint8_t sep = fmt == input_format::raw ? parse_byte(o.sep) : std::uint8_t{'\n'};
    pipeline_config config;
    config.tmp_dir = o.tmp;
    config.buffer_bytes = static_cast<size_type>(o.buffer_mb) << 20;
    config.separator = sep;
    return {read_input(o.input, fmt, sep), config};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grlbwt: BCR BWT of a string collection"};
    app.require_subcommand(1);

    input_options build_opts;
    std::string build_out;
    bool keep_temp = false;
    bool show_stats = false;
    auto* build = app.add_subcommand("build", "build the run-length BCR BWT");
    add_input_options(build, build_opts);
    build->add_option("-o,--output", build_out, "output RLBWT file")->required();
    build->add_flag("--keep-temp", keep_temp, "keep round artifacts");
    build->add_flag("--stats", show_stats, "print per-level statistics");

    std::string invert_in;
    std::string invert_out;
    std::string invert_sep = "\\n";
    auto* invert = app.add_subcommand("invert", "recover the collection from an RLBWT file");
    invert->add_option("input", invert_in, "RLBWT file")->required();
    invert->add_option("-o,--output", invert_out, "output file")->required();
    invert->add_option("--sep", invert_sep, "byte written after every string");

    input_options stats_opts;
    auto* stats = app.add_subcommand("stats", "print per-level statistics without writing a BWT");
    add_input_options(stats, stats_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            auto [collection, config] = load(build_opts);
            config.keep_temp = keep_temp;
            const build_result res = grl_bwt(collection, config);
            write_rlbwt(res.bwt, res.map, build_out);
            if (show_stats) print_stats(std::cout, res.stats);
            if (keep_temp) std::cerr << "round artifacts kept in " << res.stats.run_dir.string() << "\n";
        } else if (invert->parsed()) {
            const rlbwt f = read_rlbwt(invert_in);
            write_collection(invert_rlbwt(f), invert_out, parse_byte(invert_sep));
        } else if (stats->parsed()) {
            auto [collection, config] = load(stats_opts);
            print_stats(std::cout, collection_stats(collection, config));
        }
    } catch (const std::exception& e) {
        std::cerr << "grlbwt: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
