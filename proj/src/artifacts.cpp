#include "grlbwt/artifacts.hpp"

namespace grlbwt {

namespace {

void put_bits(byte_writer& out, const bit_vector& bits) {
    out.put_u64(bits.size());
    for (auto w : bits.words()) out.put_u64(w);
}

bit_vector get_bits(byte_reader& in, size_type expected) {
    const size_type n = in.get_u64();
    if (n != expected) throw corruption_error("bit vector of " + std::to_string(n) + " bits, expected " + std::to_string(expected));
    bit_vector bits(n);
    for (auto& w : bits.words()) w = in.get_u64();
    return bits;
}

void expect_end(byte_reader& in) {
    if (!in.at_end()) throw corruption_error("trailing bytes in " + in.path().string());
}

}  // namespace

void write_compressed_dict(const std::filesystem::path& path, const compressed_dict& cd, size_type buffer_bytes,
                           buffer_meter* meter) {
    byte_writer out(path, buffer_bytes, meter);
    out.put_magic("GRLC");
    out.put_u64(cd.sigma);
    out.put_u64(cd.sigma_next);
    for (symbol_t b = 1; b <= cd.sigma_next; ++b) {
        const auto& p = cd.pairs[b];
        out.put_u64(p.left);
        out.put_u64((p.next << 1) | (p.next_is_rank ? 1U : 0U));
    }
    put_bits(out, cd.proper_suffix);
    put_bits(out, cd.suffix_of_text);
    out.close();
}

compressed_dict read_compressed_dict(const std::filesystem::path& path, size_type buffer_bytes,
                                     buffer_meter* meter) {
    byte_reader in(path, buffer_bytes, meter);
    in.expect_magic("GRLC");
    compressed_dict cd;
    cd.sigma = in.get_u64();
    cd.sigma_next = in.get_u64();
    cd.pairs.assign(cd.sigma_next + 1, compressed_pair{});
    for (symbol_t b = 1; b <= cd.sigma_next; ++b) {
        auto& p = cd.pairs[b];
        p.left = in.get_u64();
        const std::uint64_t v = in.get_u64();
        p.next = v >> 1;
        p.next_is_rank = (v & 1U) != 0;
        if (p.next_is_rank ? (p.next == 0 || p.next > cd.sigma_next) : (p.next == 0 || p.next > cd.sigma)) {
            throw corruption_error("pair " + std::to_string(b) + " points outside its alphabet in " + path.string());
        }
    }
    cd.proper_suffix = get_bits(in, cd.sigma_next + 1);
    cd.suffix_of_text = get_bits(in, cd.sigma_next + 1);
    expect_end(in);
    return cd;
}

void write_phrase_table(const std::filesystem::path& path, const phrase_table& table, size_type buffer_bytes,
                        buffer_meter* meter) {
    byte_writer out(path, buffer_bytes, meter);
    out.put_magic("GRLP");
    out.put_u64(table.size());
    out.put_u64(table.total_symbols());
    for (auto o : table.offsets()) out.put_u64(o);
    for (auto v : table.values()) out.put_u64(v);
    for (auto s : table.store()) out.put_u64(s);
    out.close();
}

phrase_table read_phrase_table(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter) {
    byte_reader in(path, buffer_bytes, meter);
    in.expect_magic("GRLP");
    const size_type count = in.get_u64();
    const size_type symbols = in.get_u64();
    std::vector<size_type> offsets(count + 1);
    for (auto& o : offsets) o = in.get_u64();
    std::vector<size_type> values(count);
    for (auto& v : values) v = in.get_u64();
    std::vector<symbol_t> store(symbols);
    for (auto& s : store) s = in.get_u64();
    expect_end(in);
    return phrase_table::from_parts(std::move(store), std::move(offsets), std::move(values));
}

}  // namespace grlbwt
