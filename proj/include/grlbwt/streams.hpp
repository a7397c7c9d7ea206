#ifndef GRLBWT_STREAMS_HPP
#define GRLBWT_STREAMS_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grlbwt/common.hpp"
#include "grlbwt/rle.hpp"

namespace grlbwt {

// Counts the bytes held in stream buffers; every stream registers its buffer
// while open so tests can check the working set stays bounded.
class buffer_meter {
public:
    void acquire(size_type bytes) {
        current_ += bytes;
        if (current_ > peak_) peak_ = current_;
    }
    void release(size_type bytes) { current_ -= bytes; }
    size_type current() const { return current_; }
    size_type peak() const { return peak_; }

private:
    size_type current_ = 0;
    size_type peak_ = 0;
};

// Owned POSIX file descriptor with positioned reads and writes.
class file {
public:
    file() = default;
    file(const file&) = delete;
    file& operator=(const file&) = delete;
    file(file&& o) noexcept;
    file& operator=(file&& o) noexcept;
    ~file();

    static file open_read(const std::filesystem::path& path);
    static file create(const std::filesystem::path& path);

    // Returns fewer bytes than asked only at end of file.
    size_type read_at(void* dst, size_type len, size_type offset) const;
    void write_at(const void* src, size_type len, size_type offset);
    size_type size() const;
    const std::filesystem::path& path() const { return path_; }
    void close();

private:
    int fd_ = -1;
    std::filesystem::path path_;
};

class byte_writer {
public:
    byte_writer(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter = nullptr);
    byte_writer(const byte_writer&) = delete;
    byte_writer& operator=(const byte_writer&) = delete;
    ~byte_writer();

    void write(const void* src, size_type len);
    void put_u8(std::uint8_t v) { write(&v, 1); }
    void put_u64(std::uint64_t v);
    void put_varint(std::uint64_t v);
    void put_magic(std::string_view magic) { write(magic.data(), magic.size()); }

    // Overwrites bytes already written (header fields known only at the end).
    void patch_u64(size_type offset, std::uint64_t v);

    size_type offset() const { return offset_; }
    void close();

private:
    void flush();

    file file_;
    std::vector<std::uint8_t> buf_;
    size_type capacity_;
    size_type flushed_ = 0;
    size_type offset_ = 0;
    buffer_meter* meter_;
    bool open_ = true;
};

class byte_reader {
public:
    byte_reader(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter = nullptr);
    byte_reader(const byte_reader&) = delete;
    byte_reader& operator=(const byte_reader&) = delete;
    ~byte_reader();

    void read(void* dst, size_type len);
    std::uint8_t get_u8();
    std::uint64_t get_u64();
    std::uint64_t get_varint();
    void expect_magic(std::string_view magic);

    bool at_end();
    size_type offset() const { return offset_ - (end_ - pos_); }
    const std::filesystem::path& path() const { return file_.path(); }

private:
    bool fill();
    [[noreturn]] void truncated() const;

    file file_;
    std::vector<std::uint8_t> buf_;
    size_type pos_ = 0;
    size_type end_ = 0;
    size_type offset_ = 0;  // file offset just past the buffered bytes
    buffer_meter* meter_;
};

// Symbol file: "GRLT", u8 width (4 or 8), u64 count, then count fixed-width
// little-endian symbols.
class symbol_file_writer {
public:
    symbol_file_writer(const std::filesystem::path& path, symbol_t max_symbol, size_type buffer_bytes,
                       buffer_meter* meter = nullptr);
    void push(symbol_t s);
    size_type count() const { return count_; }
    void close();

private:
    byte_writer out_;
    unsigned width_;
    size_type count_ = 0;
    bool open_ = true;
};

// Reads a symbol file front to back (next) or back to front (prev).
class symbol_file_reader {
public:
    enum class direction { forward, backward };

    symbol_file_reader(const std::filesystem::path& path, direction dir, size_type buffer_bytes,
                       buffer_meter* meter = nullptr);
    symbol_file_reader(const symbol_file_reader&) = delete;
    symbol_file_reader& operator=(const symbol_file_reader&) = delete;
    ~symbol_file_reader();

    bool next(symbol_t& out);
    // Same stream under the name the parser expects.
    bool prev(symbol_t& out) { return next(out); }
    size_type count() const { return count_; }

private:
    bool refill();

    file file_;
    direction dir_;
    unsigned width_ = 0;
    size_type count_ = 0;
    size_type done_ = 0;  // symbols handed out
    std::vector<std::uint8_t> buf_;
    size_type buf_symbols_ = 0;
    size_type buf_pos_ = 0;
    size_type capacity_symbols_ = 0;
    buffer_meter* meter_;
    size_type metered_ = 0;
};

// Run file: "GRLR", u64 run_count, u64 total, then per run a varint symbol
// and a varint length.
class run_file_writer {
public:
    run_file_writer(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter = nullptr);
    ~run_file_writer();

    void append_run(symbol_t symbol, size_type length);
    void append_run(const run& r) { append_run(r.symbol, r.length); }
    void append_separate(symbol_t symbol, size_type length);

    size_type run_count() const { return runs_ + (have_pending_ ? 1 : 0); }
    size_type total() const { return total_; }
    void close();

private:
    void emit_pending();

    byte_writer out_;
    run pending_{};
    bool have_pending_ = false;
    bool pending_mergeable_ = false;
    size_type runs_ = 0;
    size_type total_ = 0;
    bool open_ = true;
};

class run_file_reader {
public:
    run_file_reader(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter = nullptr);

    bool next(run& out);
    size_type run_count() const { return run_count_; }
    size_type total() const { return total_; }

private:
    byte_reader in_;
    size_type run_count_ = 0;
    size_type total_ = 0;
    size_type read_ = 0;
    size_type seen_total_ = 0;
};

void write_run_file(const std::filesystem::path& path, const run_sequence& seq, size_type buffer_bytes,
                    buffer_meter* meter = nullptr);
run_sequence read_run_file(const std::filesystem::path& path, size_type buffer_bytes,
                           buffer_meter* meter = nullptr);

}  // namespace grlbwt

#endif
