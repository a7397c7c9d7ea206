#include <doctest.h>

#include <algorithm>
#include <random>

#include "grlbwt/iss_core.hpp"
#include "grlbwt/parser.hpp"
#include "support.hpp"

using namespace grlbwt;
using st = suffix_type;

namespace {

bit_vector sentinel_marks(symbol_t sigma) {
    bit_vector b(sigma + 1);
    b.set(sentinel_symbol);
    return b;
}

// Sort of all suffix positions of R by lms_compare, with range flags.
std::vector<size_type> brute_force_sa(const dictionary& d) {
    std::vector<size_type> pos(d.symbols.size());
    for (size_type j = 0; j < pos.size(); ++j) pos[j] = j;
    auto suffix = [&](size_type p) {
        const size_type id = d.phrase_of(p);
        return std::span<const symbol_t>(d.symbols.data() + p, d.starts[id + 1] - p);
    };
    std::stable_sort(pos.begin(), pos.end(), [&](size_type a, size_type b) {
        return lms_compare(suffix(a), suffix(b), d.phrase_of(a), d.phrase_of(b)) < 0;
    });
    std::vector<size_type> out;
    for (size_type j = 0; j < pos.size(); ++j) {
        const bool start = j == 0 || !std::ranges::equal(suffix(pos[j]), suffix(pos[j - 1]));
        out.push_back((pos[j] << 1) | (start ? 1U : 0U));
    }
    return out;
}

}  // namespace

TEST_CASE("classify") {
    // g t a c c $ with a=2 c=3 g=4 t=5
    const std::vector<symbol_t> gtacc{4, 5, 2, 3, 3, 1};
    CHECK(classify(gtacc, sentinel_marks(5)) == std::vector<st>{st::S, st::L, st::LMS, st::L, st::L, st::LMS});

    const std::vector<symbol_t> aab{2, 2, 3, 1};
    CHECK(classify(aab, sentinel_marks(3)) == std::vector<st>{st::S, st::S, st::L, st::LMS});

    const std::vector<symbol_t> dollar{1};
    CHECK(classify(dollar, sentinel_marks(1)) == std::vector<st>{st::S});

    // b $ a b $: the marked $ ends the first string and is S-type
    const std::vector<symbol_t> two{3, 1, 2, 3, 1};
    CHECK(classify(two, sentinel_marks(3)) == std::vector<st>{st::L, st::LMS, st::S, st::L, st::LMS});
}

TEST_CASE("lms_compare") {
    const std::vector<symbol_t> ta{5, 2}, t{5}, aata{2, 2, 5, 2}, acc{2, 3, 3, 1};
    CHECK(lms_compare(t, ta, 0, 0) > 0);
    CHECK(lms_compare(ta, t, 0, 0) < 0);
    CHECK(lms_compare(aata, acc, 0, 0) < 0);
    CHECK(lms_compare(ta, ta, 2, 5) < 0);
    CHECK(lms_compare(ta, ta, 5, 2) > 0);
    CHECK(lms_compare(ta, ta, 3, 3) == 0);
}

TEST_CASE("two-string example: dictionary in the worked phrase order") {
    // a=2 c=3 g=4 t=5; R = gta aata agta acc$
    dictionary d;
    d.append_phrase(std::vector<symbol_t>{4, 5, 2}, 2, false);
    d.append_phrase(std::vector<symbol_t>{2, 2, 5, 2}, 1, false);
    d.append_phrase(std::vector<symbol_t>{2, 4, 5, 2}, 1, false);
    d.append_phrase(std::vector<symbol_t>{2, 3, 3, 1}, 2, true);
    d.finalize();
    const auto sa = build_generalized_sa(d, 5);
    REQUIRE(sa.size() == 15);
    CHECK(sa.raw() == brute_force_sa(d));

    // "a" ranks above aata, acc$, agta and ata, so its range is [6,8]
    CHECK(sa.range_start(5));
    CHECK_FALSE(sa.range_start(6));
    CHECK_FALSE(sa.range_start(7));
    CHECK(sa.range_start(8));
    CHECK(std::vector<size_type>{sa.position(5) + 1, sa.position(6) + 1, sa.position(7) + 1} ==
          std::vector<size_type>{3, 7, 11});

    std::vector<std::vector<symbol_t>> ranges;
    for (size_type j = 0; j < sa.size(); ++j) {
        if (!sa.range_start(j)) continue;
        const size_type p = sa.position(j);
        const size_type id = d.phrase_of(p);
        ranges.emplace_back(d.symbols.begin() + p, d.symbols.begin() + d.starts[id + 1]);
    }
    const std::vector<std::vector<symbol_t>> expected{
        {1}, {2, 2, 5, 2}, {2, 3, 3, 1}, {2, 4, 5, 2}, {2, 5, 2}, {2}, {3, 1}, {3, 3, 1}, {4, 5, 2}, {5, 2}};
    CHECK(ranges == expected);
}

TEST_CASE("single phrase ab$") {
    dictionary d;
    d.append_phrase(std::vector<symbol_t>{2, 3, 1}, 1, true);
    d.finalize();
    const auto sa = build_generalized_sa(d, 3);
    CHECK(sa.raw() == std::vector<size_type>{(2 << 1) | 1, (0 << 1) | 1, (1 << 1) | 1});
}

TEST_CASE("generalized SA matches the brute-force sort on parsed dictionaries") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int it = 0; it < 300; ++it) {
        auto c = testing::random_collection(rng, 2 + rng() % 4, 1 + rng() % 12, 8, rng() % 6);
        text_level cur = ingest(c).first;
        while (cur.size() > cur.k) {
            auto r = parse_round(cur);
            CHECK(r.sa.size() == r.dict.symbols.size());
            CHECK(r.sa.raw() == brute_force_sa(r.dict));
            ++checked;
            cur = r.next;
        }
    }
    CHECK(checked >= 300);
}
