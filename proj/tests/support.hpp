#ifndef GRLBWT_TESTS_SUPPORT_HPP
#define GRLBWT_TESTS_SUPPORT_HPP

#include <unistd.h>

#include <filesystem>
#include <random>
#include <string>

#include "grlbwt/alphabet_text.hpp"
#include "grlbwt/parser.hpp"

namespace grlbwt::testing {

// Collections for the oracle grid. Modes: 0 random, 1 all equal, 2 periodic,
// 3 single-symbol strings, 4 one-letter alphabet, 5 mutated copies.
inline string_collection random_collection(std::mt19937_64& rng, unsigned sigma, unsigned k, unsigned max_len,
                                            unsigned mode) {
    auto letter = [&](unsigned s) { return static_cast<char>('a' + rng() % s); };
    auto length = [&] { return 1 + static_cast<unsigned>(rng() % max_len); };
    string_collection c;
    std::string base;
    const unsigned base_len = length();
    for (unsigned j = 0; j < base_len; ++j) base.push_back(letter(sigma));
    for (unsigned u = 0; u < k; ++u) {
        std::string s;
        switch (mode) {
            case 1:
                s = base;
                break;
            case 2: {
                const unsigned period = 1 + static_cast<unsigned>(rng() % std::min(3U, base_len));
                const unsigned len = length();
                for (unsigned j = 0; j < len; ++j) s.push_back(base[j % period]);
                break;
            }
            case 3:
                s.push_back(letter(sigma));
                break;
            case 4:
                s.assign(length(), 'a');
                break;
            case 5:
                s = base;
                if (rng() % 2) s[rng() % s.size()] = letter(sigma);
                break;
            default: {
                const unsigned len = length();
                for (unsigned j = 0; j < len; ++j) s.push_back(letter(sigma));
            }
        }
        c.strings.push_back(s);
    }
    return c;
}

inline std::string random_text(std::mt19937_64& rng, size_t len, unsigned sigma) {
    std::string s(len, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + rng() % sigma);
    return s;
}

// Fresh directory under the system temp dir, removed on destruction.
class scratch_dir {
public:
    explicit scratch_dir(const std::string& tag) {
        static unsigned counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("grlbwt-test-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~scratch_dir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

// Expands every symbol of the next level with the ranked phrases of a round and
// rejoins them: phrases of one string overlap on one symbol, the first phrase
// after a string boundary does not.
inline std::vector<symbol_t> unparse(const round_result& r, const bit_vector& next_marks) {
    const expansion_dictionary ed = rank_ordered_phrases(r.expanded, r.ranking);
    std::vector<symbol_t> out;
    bool string_start = true;
    for (auto s : r.next.symbols) {
        const auto& p = ed.phrases.at(s - 1);
        out.insert(out.end(), p.begin() + (string_start ? 0 : 1), p.end());
        string_start = s < next_marks.size() && next_marks[s];
    }
    return out;
}

}  // namespace grlbwt::testing

#endif
