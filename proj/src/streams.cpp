#include "grlbwt/streams.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

namespace grlbwt {

namespace {

[[noreturn]] void fail(const std::string& what, const std::filesystem::path& path, int err) {
    if (err == ENOSPC) throw io_error("disk full while writing " + path.string());
    throw io_error(what + " " + path.string() + ": " + std::strerror(err));
}

constexpr std::string_view symbol_magic = "GRLT";
constexpr std::string_view run_magic = "GRLR";
constexpr size_type symbol_header = 4 + 1 + 8;

std::uint64_t load_le(const std::uint8_t* p, unsigned width) {
    std::uint64_t v = 0;
    for (unsigned b = 0; b < width; ++b) v |= std::uint64_t{p[b]} << (8 * b);
    return v;
}

}  // namespace

file::file(file&& o) noexcept : fd_(o.fd_), path_(std::move(o.path_)) { o.fd_ = -1; }

file& file::operator=(file&& o) noexcept {
    if (this != &o) {
        close();
        fd_ = o.fd_;
        path_ = std::move(o.path_);
        o.fd_ = -1;
    }
    return *this;
}

file::~file() { close(); }

void file::close() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
}

file file::open_read(const std::filesystem::path& path) {
    file f;
    f.path_ = path;
    f.fd_ = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
    if (f.fd_ < 0) fail("cannot open", path, errno);
    return f;
}

file file::create(const std::filesystem::path& path) {
    file f;
    f.path_ = path;
    f.fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
    if (f.fd_ < 0) fail("cannot create", path, errno);
    return f;
}

size_type file::read_at(void* dst, size_type len, size_type offset) const {
    auto* p = static_cast<std::uint8_t*>(dst);
    size_type got = 0;
    while (got < len) {
        const ssize_t r = ::pread(fd_, p + got, len - got, static_cast<off_t>(offset + got));
        if (r < 0) {
            if (errno == EINTR) continue;
            fail("read error on", path_, errno);
        }
        if (r == 0) break;
        got += static_cast<size_type>(r);
    }
    return got;
}

void file::write_at(const void* src, size_type len, size_type offset) {
    const auto* p = static_cast<const std::uint8_t*>(src);
    size_type put = 0;
    while (put < len) {
        const ssize_t r = ::pwrite(fd_, p + put, len - put, static_cast<off_t>(offset + put));
        if (r < 0) {
            if (errno == EINTR) continue;
            fail("write error on", path_, errno);
        }
        if (r == 0) fail("write error on", path_, ENOSPC);
        put += static_cast<size_type>(r);
    }
}

size_type file::size() const {
    struct stat st {};
    if (::fstat(fd_, &st) != 0) fail("cannot stat", path_, errno);
    return static_cast<size_type>(st.st_size);
}

// ---- byte_writer

byte_writer::byte_writer(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter)
    : file_(file::create(path)), capacity_(std::max<size_type>(buffer_bytes, 16)), meter_(meter) {
    buf_.reserve(capacity_);
    if (meter_) meter_->acquire(capacity_);
}

byte_writer::~byte_writer() {
    try {
        close();
    } catch (...) {
    }
}

void byte_writer::flush() {
    if (buf_.empty()) return;
    file_.write_at(buf_.data(), buf_.size(), flushed_);
    flushed_ += buf_.size();
    buf_.clear();
}

void byte_writer::write(const void* src, size_type len) {
    const auto* p = static_cast<const std::uint8_t*>(src);
    offset_ += len;
    while (len > 0) {
        const size_type n = std::min(len, capacity_ - buf_.size());
        buf_.insert(buf_.end(), p, p + n);
        p += n;
        len -= n;
        if (buf_.size() == capacity_) flush();
    }
}

void byte_writer::put_u64(std::uint64_t v) {
    std::uint8_t b[8];
    for (unsigned i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    write(b, 8);
}

void byte_writer::put_varint(std::uint64_t v) {
    std::uint8_t b[10];
    unsigned n = 0;
    while (v >= 0x80) {
        b[n++] = static_cast<std::uint8_t>(v | 0x80);
        v >>= 7;
    }
    b[n++] = static_cast<std::uint8_t>(v);
    write(b, n);
}

void byte_writer::patch_u64(size_type offset, std::uint64_t v) {
    std::uint8_t b[8];
    for (unsigned i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    if (offset >= flushed_) {
        std::memcpy(buf_.data() + (offset - flushed_), b, 8);
    } else {
        flush();
        file_.write_at(b, 8, offset);
    }
}

void byte_writer::close() {
    if (!open_) return;
    open_ = false;
    if (meter_) meter_->release(capacity_);
    flush();
    file_.close();
}

// ---- byte_reader

byte_reader::byte_reader(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter)
    : file_(file::open_read(path)), meter_(meter) {
    // no point buffering more than the whole file
    buf_.resize(std::max<size_type>(std::min(buffer_bytes, file_.size()), 16));
    if (meter_) meter_->acquire(buf_.size());
}

byte_reader::~byte_reader() {
    if (meter_) meter_->release(buf_.size());
}

bool byte_reader::fill() {
    pos_ = 0;
    end_ = file_.read_at(buf_.data(), buf_.size(), offset_);
    offset_ += end_;
    return end_ > 0;
}

void byte_reader::truncated() const { throw corruption_error("unexpected end of file in " + file_.path().string()); }

bool byte_reader::at_end() { return pos_ == end_ && !fill(); }

void byte_reader::read(void* dst, size_type len) {
    auto* p = static_cast<std::uint8_t*>(dst);
    while (len > 0) {
        if (pos_ == end_ && !fill()) truncated();
        const size_type n = std::min(len, end_ - pos_);
        std::memcpy(p, buf_.data() + pos_, n);
        pos_ += n;
        p += n;
        len -= n;
    }
}

std::uint8_t byte_reader::get_u8() {
    if (pos_ == end_ && !fill()) truncated();
    return buf_[pos_++];
}

std::uint64_t byte_reader::get_u64() {
    std::uint8_t b[8];
    read(b, 8);
    return load_le(b, 8);
}

std::uint64_t byte_reader::get_varint() {
    std::uint64_t v = 0;
    for (unsigned shift = 0; shift < 64; shift += 7) {
        const std::uint8_t b = get_u8();
        v |= std::uint64_t{b & 0x7FU} << shift;
        if ((b & 0x80U) == 0) return v;
    }
    throw corruption_error("varint longer than 10 bytes in " + file_.path().string());
}

void byte_reader::expect_magic(std::string_view magic) {
    std::string got(magic.size(), '\0');
    if (file_.size() < magic.size()) throw corruption_error("file too short for a header: " + path().string());
    read(got.data(), got.size());
    if (got != magic) throw corruption_error("bad magic in " + path().string() + ", expected " + std::string(magic));
}

// ---- symbol files

symbol_file_writer::symbol_file_writer(const std::filesystem::path& path, symbol_t max_symbol,
                                       size_type buffer_bytes, buffer_meter* meter)
    : out_(path, buffer_bytes, meter), width_(max_symbol <= 0xFFFFFFFFULL ? 4 : 8) {
    out_.put_magic(symbol_magic);
    out_.put_u8(static_cast<std::uint8_t>(width_));
    out_.put_u64(0);
}

void symbol_file_writer::push(symbol_t s) {
    std::uint8_t b[8];
    for (unsigned i = 0; i < width_; ++i) b[i] = static_cast<std::uint8_t>(s >> (8 * i));
    out_.write(b, width_);
    ++count_;
}

void symbol_file_writer::close() {
    if (!open_) return;
    open_ = false;
    out_.patch_u64(5, count_);
    out_.close();
}

symbol_file_reader::symbol_file_reader(const std::filesystem::path& path, direction dir, size_type buffer_bytes,
                                       buffer_meter* meter)
    : file_(file::open_read(path)), dir_(dir), meter_(meter) {
    std::uint8_t header[symbol_header];
    if (file_.read_at(header, symbol_header, 0) != symbol_header ||
        std::string_view(reinterpret_cast<char*>(header), 4) != symbol_magic) {
        throw corruption_error("bad symbol file header in " + path.string());
    }
    width_ = header[4];
    if (width_ != 4 && width_ != 8) throw corruption_error("bad symbol width in " + path.string());
    count_ = load_le(header + 5, 8);
    if (file_.size() != symbol_header + count_ * width_) {
        throw corruption_error("symbol file " + path.string() + " has the wrong size");
    }
    capacity_symbols_ = std::max<size_type>(std::min(buffer_bytes / width_, count_), 1);
    buf_.resize(capacity_symbols_ * width_);
    metered_ = buf_.size();
    if (meter_) meter_->acquire(metered_);
}

symbol_file_reader::~symbol_file_reader() {
    if (meter_) meter_->release(metered_);
}

bool symbol_file_reader::refill() {
    const size_type left = count_ - done_;
    if (left == 0) return false;
    const size_type n = std::min(left, capacity_symbols_);
    // forward reads take symbols [done, done+n); backward reads the n symbols
    // just before the last block handed out
    const size_type first = dir_ == direction::forward ? done_ : left - n;
    if (file_.read_at(buf_.data(), n * width_, symbol_header + first * width_) != n * width_) {
        throw corruption_error("short read in " + file_.path().string());
    }
    buf_symbols_ = n;
    buf_pos_ = 0;
    return true;
}

bool symbol_file_reader::next(symbol_t& out) {
    if (buf_pos_ == buf_symbols_ && !refill()) return false;
    const size_type idx = dir_ == direction::forward ? buf_pos_ : buf_symbols_ - 1 - buf_pos_;
    out = load_le(buf_.data() + idx * width_, width_);
    ++buf_pos_;
    ++done_;
    return true;
}

// ---- run files

run_file_writer::run_file_writer(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter)
    : out_(path, buffer_bytes, meter) {
    out_.put_magic(run_magic);
    out_.put_u64(0);
    out_.put_u64(0);
}

run_file_writer::~run_file_writer() {
    try {
        close();
    } catch (...) {
    }
}

void run_file_writer::emit_pending() {
    if (!have_pending_) return;
    out_.put_varint(pending_.symbol);
    out_.put_varint(pending_.length);
    ++runs_;
    have_pending_ = false;
}

void run_file_writer::append_run(symbol_t symbol, size_type length) {
    if (length == 0) throw error("append_run: run length must be positive");
    total_ += length;
    if (have_pending_ && pending_mergeable_ && pending_.symbol == symbol) {
        pending_.length += length;
        return;
    }
    emit_pending();
    pending_ = {symbol, length};
    have_pending_ = true;
    pending_mergeable_ = true;
}

void run_file_writer::append_separate(symbol_t symbol, size_type length) {
    if (length == 0) throw error("append_separate: run length must be positive");
    total_ += length;
    emit_pending();
    pending_ = {symbol, length};
    have_pending_ = true;
    pending_mergeable_ = false;
}

void run_file_writer::close() {
    if (!open_) return;
    open_ = false;
    emit_pending();
    out_.patch_u64(4, runs_);
    out_.patch_u64(12, total_);
    out_.close();
}

run_file_reader::run_file_reader(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter)
    : in_(path, buffer_bytes, meter) {
    in_.expect_magic(run_magic);
    run_count_ = in_.get_u64();
    total_ = in_.get_u64();
}

bool run_file_reader::next(run& out) {
    if (read_ == run_count_) {
        if (seen_total_ != total_) throw corruption_error("run lengths do not add up in " + in_.path().string());
        if (!in_.at_end()) throw corruption_error("trailing bytes in " + in_.path().string());
        return false;
    }
    out.symbol = in_.get_varint();
    out.length = in_.get_varint();
    if (out.length == 0) throw corruption_error("zero-length run in " + in_.path().string());
    seen_total_ += out.length;
    ++read_;
    return true;
}

void write_run_file(const std::filesystem::path& path, const run_sequence& seq, size_type buffer_bytes,
                    buffer_meter* meter) {
    run_file_writer w(path, buffer_bytes, meter);
    for (const auto& r : seq.runs()) w.append_separate(r.symbol, r.length);
    w.close();
}

run_sequence read_run_file(const std::filesystem::path& path, size_type buffer_bytes, buffer_meter* meter) {
    run_file_reader r(path, buffer_bytes, meter);
    run_sequence seq;
    seq.reserve(r.run_count());
    run x;
    while (r.next(x)) seq.append_separate(x.symbol, x.length);
    return seq;
}

}  // namespace grlbwt
