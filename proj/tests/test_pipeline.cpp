#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <random>

#include "grlbwt/oracle.hpp"
#include "grlbwt/pipeline.hpp"
#include "support.hpp"

using namespace grlbwt;
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

pipeline_config small_config(const fs::path& tmp, size_type buffer = 64) {
    pipeline_config cfg;
    cfg.tmp_dir = tmp;
    cfg.buffer_bytes = buffer;
    return cfg;
}

}  // namespace

TEST_CASE("pipeline output equals the oracle") {
    testing::scratch_dir tmp("pipe");
    const string_collection two_strings{{"gtacc", "gtaatagtacc"}};
    auto res = grl_bwt(two_strings, small_config(tmp.path()));
    CHECK(render(res.bwt.symbols(), res.map) == bcr_bwt_naive_string(two_strings));
    CHECK(res.stats.h == 4);

    res = grl_bwt({{"a"}}, small_config(tmp.path()));
    CHECK(render(res.bwt.symbols(), res.map) == "a$");

    std::mt19937_64 rng(8);
    for (int it = 0; it < 150; ++it) {
        auto c = testing::random_collection(rng, 1 + rng() % 6, 1 + rng() % 30, 40, rng() % 6);
        // tiny buffers force many refills across record boundaries
        auto r = grl_bwt(c, small_config(tmp.path(), 16 + rng() % 64));
        CHECK(r.bwt.symbols() == bcr_bwt_naive(c));
    }
    // nothing left behind
    CHECK(fs::is_empty(tmp.path()));
}

TEST_CASE("repetitive collection") {
    testing::scratch_dir tmp("rep");
    std::mt19937_64 rng(4);
    const std::string base = testing::random_text(rng, 300, 4);
    string_collection c;
    for (int u = 0; u < 100; ++u) c.strings.push_back(base);
    auto res = grl_bwt(c, small_config(tmp.path(), 4096));
    const auto oracle = run_sequence::encode(bcr_bwt_naive(c));
    CHECK(res.bwt == oracle);
    CHECK(res.stats.r * 20 < res.stats.n);
    CHECK(static_cast<double>(res.stats.n) / static_cast<double>(res.stats.r) > 1.0);
}

TEST_CASE("stats invariants") {
    testing::scratch_dir tmp("stats");
    std::mt19937_64 rng(12);
    for (int it = 0; it < 100; ++it) {
        auto c = testing::random_collection(rng, 1 + rng() % 5, 1 + rng() % 20, 60, rng() % 6);
        const auto st = collection_stats(c, small_config(tmp.path(), 256));
        REQUIRE(st.levels.size() == st.h);
        CHECK(st.levels.front().n == st.n);
        CHECK(st.levels.back().n == st.k);
        for (size_t i = 0; i + 1 < st.levels.size(); ++i) {
            CHECK(st.levels[i + 1].n < st.levels[i].n);
            CHECK(st.levels[i].empty_entries == st.levels[i + 1].sigma);
        }
        CHECK(st.h <= static_cast<size_type>(std::ceil(std::log2(static_cast<double>(st.n)))) + 2);
        CHECK(st.levels.front().bwt_runs == st.r);
        // at most three streams are open at once
        CHECK(st.peak_buffer_bytes <= 3 * 256);
        CHECK(st.peak_buffer_bytes > 0);
    }
}

TEST_CASE("hooks see every round") {
    testing::scratch_dir tmp("hooks");
    const string_collection two_strings{{"gtacc", "gtaatagtacc"}};
    auto cfg = small_config(tmp.path());
    std::vector<size_type> parsed, induced;
    cfg.on_parse = [&](const parse_event& e) {
        parsed.push_back(e.level);
        CHECK(e.pbwt.pbwt.total() == e.n);
    };
    cfg.on_induce = [&](const induce_event& e) {
        induced.push_back(e.level);
        CHECK(e.bwt_total == e.n);
    };
    grl_bwt(two_strings, cfg);
    CHECK(parsed == std::vector<size_type>{1, 2, 3});
    CHECK(induced == std::vector<size_type>{3, 2, 1});
}

TEST_CASE("determinism and kept artifacts") {
    testing::scratch_dir tmp("keep");
    std::mt19937_64 rng(21);
    auto c = testing::random_collection(rng, 4, 20, 50, 5);
    auto cfg = small_config(tmp.path(), 128);
    cfg.keep_temp = true;
    const auto a = grl_bwt(c, cfg);
    const auto b = grl_bwt(c, cfg);
    CHECK(a.bwt == b.bwt);
    CHECK(a.stats.run_dir != b.stats.run_dir);
    size_type files = 0;
    for (const auto& e : fs::directory_iterator(a.stats.run_dir)) {
        const auto name = e.path().filename().string();
        CHECK(name.rfind("round", 0) == 0);
        const auto other = b.stats.run_dir / name;
        REQUIRE(fs::exists(other));
        CHECK(read_file(e.path()) == read_file(other));
        ++files;
    }
    // text, pbwt, cdict, phrases, transformed and bwt per parsing round, plus
    // text and bwt of the last level
    CHECK(files == 6 * (a.stats.h - 1) + 2);
    CHECK(fs::exists(a.stats.run_dir / "round1.pbwt"));
    CHECK(fs::exists(a.stats.run_dir / "round1.cdict"));
    CHECK(fs::exists(a.stats.run_dir / "round1.phrases"));
    CHECK(fs::exists(a.stats.run_dir / "round1.bwt"));
}

TEST_CASE("temp directory selection and errors") {
    testing::scratch_dir tmp("env");
    ::setenv("GRLBWT_TMPDIR", tmp.path().c_str(), 1);
    pipeline_config cfg;
    cfg.keep_temp = true;
    const auto res = grl_bwt({{"abc"}}, cfg);
    CHECK(res.stats.run_dir.parent_path() == tmp.path());
    ::unsetenv("GRLBWT_TMPDIR");

    pipeline_config bad;
    bad.tmp_dir = "/proc/grlbwt-no-such-dir";
    CHECK_THROWS_AS(grl_bwt({{"abc"}}, bad), io_error);

    pipeline_config zero;
    zero.tmp_dir = tmp.path();
    zero.buffer_bytes = 0;
    CHECK_THROWS_AS(grl_bwt({{"abc"}}, zero), input_error);

    CHECK_THROWS_AS(grl_bwt({}, small_config(tmp.path())), input_error);
}
