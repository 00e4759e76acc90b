#pragma once

#include <algorithm>
#include <cstddef>
#include <map>

namespace brauerkit {

/// A finite multiset stored as element -> frequency. Zero frequencies are
/// never stored.
template <class Key, class Compare = std::less<Key>>
using multiset_map = std::map<Key, std::size_t, Compare>;

/// Per-key maximum of the two frequency functions.
template <class Key, class Compare>
[[nodiscard]] multiset_map<Key, Compare> multiset_union(const multiset_map<Key, Compare>& a,
                                                        const multiset_map<Key, Compare>& b) {
    multiset_map<Key, Compare> out = a;
    for (const auto& [key, freq] : b) {
        auto& slot = out[key];
        slot = std::max(slot, freq);
    }
    return out;
}

/// Per-key minimum, restricted to keys present in both.
template <class Key, class Compare>
[[nodiscard]] multiset_map<Key, Compare> multiset_intersection(const multiset_map<Key, Compare>& a,
                                                               const multiset_map<Key, Compare>& b) {
    multiset_map<Key, Compare> out;
    for (const auto& [key, freq] : a) {
        if (auto it = b.find(key); it != b.end()) out.emplace(key, std::min(freq, it->second));
    }
    return out;
}

/// Frequency function of a word.
template <class Range>
[[nodiscard]] auto to_multiset(const Range& word) {
    using key_type = std::remove_cvref_t<decltype(*std::begin(word))>;
    multiset_map<key_type> out;
    for (const auto& x : word) ++out[x];
    return out;
}

}  // namespace brauerkit
