#include <doctest.h>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/parser.hpp"
#include "support.hpp"

using namespace grlbwt;

TEST_CASE("ingest counts symbols and sentinels") {
    auto [t, map] = ingest({{"gtacc", "gtaatagtacc"}});
    CHECK(t.size() == 18);
    CHECK(t.k == 2);
    CHECK(t.sigma == 5);
    CHECK(t.level == 1);
    CHECK(render(t.symbols, map) == "gtacc$gtaatagtacc$");

    auto [t2, m2] = ingest({{"ab", "aab"}});
    CHECK(t2.size() == 7);
    CHECK(t2.sigma == 3);
}

TEST_CASE("single one-letter string") {
    auto [t, map] = ingest({{"a"}});
    CHECK(t.symbols == std::vector<symbol_t>{2, 1});
    REQUIRE(t.suffix_flags.size() == 3);
    CHECK(t.suffix_flags[sentinel_symbol]);
    CHECK_FALSE(t.suffix_flags[2]);
    CHECK(map.decode(2) == 'a');
}

TEST_CASE("ingest errors") {
    CHECK_THROWS_AS(ingest({}), input_error);
    CHECK_THROWS_AS(ingest({{"ab", ""}}), input_error);
    try {
        ingest({{"ab", "a\nb"}});
        FAIL("expected an error");
    } catch (const input_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("string 1") != std::string::npos);
        CHECK(msg.find("offset 1") != std::string::npos);
    }
    CHECK_NOTHROW(ingest({{"a\nb"}}, 0));
}

TEST_CASE("symbol map is dense and byte ordered") {
    const std::vector<std::uint8_t> bytes{'z', 'A', '0'};
    auto m = symbol_map::from_bytes(bytes);
    CHECK(m.sigma() == 4);
    CHECK(m.encode('0') == 2);
    CHECK(m.encode('A') == 3);
    CHECK(m.encode('z') == 4);
    CHECK(m.decode(4) == 'z');
    CHECK_THROWS(m.decode(1));
    CHECK_THROWS(m.decode(5));
}

TEST_CASE("decode inverts ingest") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        auto c = testing::random_collection(rng, 1 + rng() % 6, 1 + rng() % 10, 12, rng() % 6);
        auto [t, map] = ingest(c);
        CHECK(decode_text(t.symbols, map) == c);
    }
}

TEST_CASE("expand_symbol") {
    auto [t1, map] = ingest({{"gtacc", "gtaatagtacc"}});
    // identity at level 1
    CHECK(expand_symbol({}, map.encode('a')) == std::vector<symbol_t>{map.encode('a')});

    std::vector<expansion_dictionary> stack;
    std::vector<round_result> rounds;
    text_level cur = t1;
    while (true) {
        rounds.push_back(parse_round(cur));
        stack.push_back(rank_ordered_phrases(rounds.back().expanded, rounds.back().ranking));
        if (rounds.back().final) break;
        cur = rounds.back().next;
    }
    // rank 2 of level 2 is acc$
    CHECK(render(expand_symbol(std::span(stack).first(1), 2), map) == "acc$");
    // every symbol of the last level is one whole string
    const auto& top = rounds.back().next;
    REQUIRE(top.size() == 2);
    CHECK(render(expand_symbol(stack, top.symbols[0]), map) == "gtacc$");
    CHECK(render(expand_symbol(stack, top.symbols[1]), map) == "gtaatagtacc$");
    CHECK_THROWS(expand_symbol(std::span(stack).first(1), 6));
    CHECK_THROWS(expand_symbol(std::span(stack).first(1), 0));
}

TEST_CASE("marked symbols of every level expand to string suffixes") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        auto c = testing::random_collection(rng, 2 + rng() % 3, 1 + rng() % 6, 10, rng() % 6);
        auto [t, map] = ingest(c);
        std::vector<expansion_dictionary> stack;
        text_level cur = t;
        while (cur.size() > cur.k) {
            auto r = parse_round(cur);
            stack.push_back(rank_ordered_phrases(r.expanded, r.ranking));
            for (symbol_t b = 1; b <= r.next.sigma; ++b) {
                if (!r.next.suffix_flags[b]) continue;
                const std::string s = render(expand_symbol(stack, b), map);
                bool found = false;
                for (const auto& str : c.strings) {
                    const std::string full = str + "$";
                    found |= full.size() >= s.size() && full.compare(full.size() - s.size(), s.size(), s) == 0;
                }
                CHECK(found);
            }
            cur = r.next;
        }
    }
}
