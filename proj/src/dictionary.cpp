#include "grlbwt/dictionary.hpp"

#include <algorithm>

namespace grlbwt {

namespace {
constexpr size_type initial_slots = 1024;

inline std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}
}  // namespace

phrase_table::phrase_table() : offsets_{0}, slots_(initial_slots), mask_(initial_slots - 1) {}

std::uint64_t phrase_table::hash(std::span<const symbol_t> phrase) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ phrase.size();
    for (auto s : phrase) h = mix(h ^ (s + 0x9e3779b97f4a7c15ULL));
    return h;
}

size_type phrase_table::probe(std::span<const symbol_t> phrase, std::uint64_t h) const {
    size_type slot = h & mask_;
    while (slots_[slot].id != 0) {
        if (slots_[slot].hash == h && std::ranges::equal(this->phrase(slots_[slot].id - 1), phrase)) return slot;
        slot = (slot + 1) & mask_;
    }
    return slot;
}

void phrase_table::grow() {
    std::vector<slot> old(slots_.size() * 2);
    old.swap(slots_);
    mask_ = slots_.size() - 1;
    for (const auto& e : old) {
        if (e.id == 0) continue;
        size_type pos = e.hash & mask_;
        while (slots_[pos].id != 0) pos = (pos + 1) & mask_;
        slots_[pos] = e;
    }
}

size_type phrase_table::add_occurrence(std::span<const symbol_t> phrase) {
    const auto h = hash(phrase);
    const size_type pos = probe(phrase, h);
    if (slots_[pos].id != 0) {
        ++values_[slots_[pos].id - 1];
        return slots_[pos].id - 1;
    }
    const size_type id = values_.size();
    store_.insert(store_.end(), phrase.begin(), phrase.end());
    offsets_.push_back(store_.size());
    values_.push_back(1);
    slots_[pos] = {id + 1, h};
    if (values_.size() * 2 > slots_.size()) grow();
    return id;
}

std::optional<size_type> phrase_table::find(std::span<const symbol_t> phrase) const {
    const size_type pos = probe(phrase, hash(phrase));
    if (slots_[pos].id == 0) return std::nullopt;
    return slots_[pos].id - 1;
}

phrase_table phrase_table::from_parts(std::vector<symbol_t> store, std::vector<size_type> offsets,
                                      std::vector<size_type> values) {
    if (offsets.size() != values.size() + 1 || offsets.front() != 0 || offsets.back() != store.size()) {
        throw corruption_error("phrase table snapshot is inconsistent");
    }
    for (size_type id = 0; id < values.size(); ++id) {
        if (offsets[id] >= offsets[id + 1]) throw corruption_error("phrase table snapshot has an empty phrase");
    }
    phrase_table t;
    t.store_ = std::move(store);
    t.offsets_ = std::move(offsets);
    t.values_ = std::move(values);
    size_type slots = initial_slots;
    while (t.values_.size() * 2 > slots) slots *= 2;
    t.slots_.assign(slots, {});
    t.mask_ = slots - 1;
    for (size_type id = 0; id < t.values_.size(); ++id) {
        const auto h = hash(t.phrase(id));
        const size_type pos = t.probe(t.phrase(id), h);
        if (t.slots_[pos].id != 0) throw corruption_error("phrase table snapshot has duplicate phrases");
        t.slots_[pos] = {id + 1, h};
    }
    return t;
}

void dictionary::append_phrase(std::span<const symbol_t> phrase, size_type freq, bool ends_string) {
    if (starts.empty()) starts.push_back(0);
    for (size_type j = 0; j < phrase.size(); ++j) {
        symbols.push_back(phrase[j]);
        boundaries.push_back(j == 0);
    }
    starts.push_back(symbols.size());
    freqs.push_back(freq);
    suffix_of_text.push_back(ends_string);
}

}  // namespace grlbwt
