#include "grlbwt/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "grlbwt/streams.hpp"

namespace grlbwt {

namespace {

constexpr size_type io_buffer = size_type{1} << 20;

std::string line_tag(size_type line) { return "line " + std::to_string(line); }

}  // namespace

input_format parse_format(std::string_view name) {
    if (name == "lines") return input_format::lines;
    if (name == "fasta") return input_format::fasta;
    if (name == "raw") return input_format::raw;
    throw input_error("unknown input format '" + std::string(name) + "' (expected lines, fasta or raw)");
}

string_collection parse_input(std::string_view data, input_format format, std::uint8_t separator) {
    if (data.empty()) throw input_error("input is empty");
    string_collection out;

    if (format == input_format::fasta) {
        size_type line = 0;
        bool in_record = false;
        size_type header_line = 0;
        size_type pos = 0;
        auto close_record = [&] {
            if (in_record && out.strings.back().empty()) {
                throw input_error("fasta record at " + line_tag(header_line) + " has no sequence");
            }
        };
        while (pos < data.size()) {
            size_type end = data.find('\n', pos);
            if (end == std::string_view::npos) end = data.size();
            std::string_view l = data.substr(pos, end - pos);
            pos = end + 1;
            ++line;
            if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
            if (l.empty()) continue;
            if (l.front() == '>') {
                close_record();
                out.strings.emplace_back();
                in_record = true;
                header_line = line;
                continue;
            }
            if (!in_record) throw input_error("fasta sequence before the first header at " + line_tag(line));
            out.strings.back().append(l);
        }
        close_record();
        if (out.strings.empty()) throw input_error("fasta input has no records");
        return out;
    }

    const char sep = format == input_format::lines ? '\n' : static_cast<char>(separator);
    size_type line = 1;
    size_type pos = 0;
    while (pos < data.size()) {
        size_type end = data.find(sep, pos);
        if (end == std::string_view::npos) end = data.size();
        if (end == pos) {
            throw input_error("empty " + std::string(format == input_format::lines ? "line" : "record") + " " +
                              std::to_string(out.strings.size() + 1) + " at " + line_tag(line));
        }
        std::string_view rec = data.substr(pos, end - pos);
        out.strings.emplace_back(rec);
        line += static_cast<size_type>(std::count(rec.begin(), rec.end(), '\n'));
        if (sep == '\n') ++line;
        pos = end + 1;
    }
    return out;
}

string_collection read_input(const std::filesystem::path& path, input_format format, std::uint8_t separator) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read error on " + path.string());
    try {
        return parse_input(data, format, separator);
    } catch (const input_error& e) {
        throw input_error(path.string() + ": " + e.what());
    }
}

void write_rlbwt(const run_sequence& seq, const symbol_map& map, const std::filesystem::path& path) {
    size_type k = 0;
    for (const auto& r : seq.runs()) {
        if (r.symbol == sentinel_symbol) k += r.length;
    }
    byte_writer out(path, io_buffer);
    out.put_magic("GRLB");
    out.put_u8(rlbwt_version);
    out.put_u8(0);
    out.put_u64(k);
    out.put_u64(map.sigma());
    out.put_u64(seq.run_count());
    out.put_u64(map.bytes().size());
    for (size_type j = 0; j < map.bytes().size(); ++j) {
        out.put_u8(map.bytes()[j]);
        out.put_varint(j + 2);
    }
    for (const auto& r : seq.runs()) {
        out.put_varint(r.symbol);
        out.put_varint(r.length);
    }
    out.close();
}

rlbwt read_rlbwt(const std::filesystem::path& path) {
    byte_reader in(path, io_buffer);
    in.expect_magic("GRLB");
    const std::uint8_t version = in.get_u8();
    if (version != rlbwt_version) {
        throw corruption_error("unsupported RLBWT version " + std::to_string(version) + " in " + path.string());
    }
    in.get_u8();  // flags, unused
    rlbwt f;
    f.k = in.get_u64();
    const symbol_t sigma = in.get_u64();
    const size_type run_count = in.get_u64();
    const size_type pairs = in.get_u64();
    if (pairs > 256 || pairs + 1 != sigma) throw corruption_error("symbol map does not match sigma in " + path.string());
    std::vector<std::uint8_t> bytes;
    for (size_type j = 0; j < pairs; ++j) {
        const std::uint8_t b = in.get_u8();
        const symbol_t s = in.get_varint();
        if (s != j + 2 || (!bytes.empty() && b <= bytes.back())) {
            throw corruption_error("symbol map is not dense and byte-ordered in " + path.string());
        }
        bytes.push_back(b);
    }
    f.map = symbol_map::from_bytes(bytes);
    size_type sentinels = 0;
    for (size_type j = 0; j < run_count; ++j) {
        const symbol_t s = in.get_varint();
        const size_type len = in.get_varint();
        if (s == 0 || s > sigma || len == 0) throw corruption_error("invalid run " + std::to_string(j) + " in " + path.string());
        if (s == sentinel_symbol) sentinels += len;
        f.runs.append_run(s, len);
    }
    if (!in.at_end()) throw corruption_error("trailing bytes in " + path.string());
    if (sentinels != f.k) throw corruption_error("sentinel count differs from k in " + path.string());
    return f;
}

std::vector<std::vector<symbol_t>> invert_runs(const run_sequence& bwt, size_type k) {
    const auto& runs = bwt.runs();
    symbol_t sigma = 0;
    for (const auto& r : runs) sigma = std::max(sigma, r.symbol);
    std::vector<size_type> start(runs.size());
    std::vector<size_type> before(runs.size());
    std::vector<size_type> counts(sigma + 2, 0);
    size_type pos = 0;
    for (size_type j = 0; j < runs.size(); ++j) {
        if (runs[j].symbol == 0) throw error("BWT contains symbol 0");
        start[j] = pos;
        before[j] = counts[runs[j].symbol];
        counts[runs[j].symbol] += runs[j].length;
        pos += runs[j].length;
    }
    if (counts.size() <= sentinel_symbol || counts[sentinel_symbol] != k) {
        throw error("BWT sentinel count differs from k = " + std::to_string(k));
    }
    std::vector<size_type> first(sigma + 2, 0);
    for (symbol_t c = 1; c <= sigma; ++c) first[c + 1] = first[c] + counts[c];

    std::vector<std::vector<symbol_t>> out(k);
    for (size_type u = 0; u < k; ++u) {
        size_type row = u;
        auto& s = out[u];
        while (true) {
            const size_type r = static_cast<size_type>(std::upper_bound(start.begin(), start.end(), row) - start.begin()) - 1;
            const symbol_t c = runs[r].symbol;
            if (c == sentinel_symbol) break;
            if (s.size() >= pos) throw error("LF walk does not reach a sentinel");
            s.push_back(c);
            row = first[c] + before[r] + (row - start[r]);
        }
        std::reverse(s.begin(), s.end());
    }
    return out;
}

string_collection invert_rlbwt(const rlbwt& file) {
    string_collection out;
    for (const auto& s : invert_runs(file.runs, file.k)) {
        std::string str;
        str.reserve(s.size());
        for (auto c : s) str.push_back(static_cast<char>(file.map.decode(c)));
        out.strings.push_back(std::move(str));
    }
    return out;
}

void write_collection(const string_collection& c, const std::filesystem::path& path, std::uint8_t terminator) {
    byte_writer out(path, io_buffer);
    for (const auto& s : c.strings) {
        out.write(s.data(), s.size());
        out.put_u8(terminator);
    }
    out.close();
}

}  // namespace grlbwt
