#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance binary. Nothing here calls into the library's invariant code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

using words_t = std::vector<std::vector<std::string>>;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string fixture(const std::string& name) { return read_file(std::string(BRAUERKIT_FIXTURES) + "/" + name); }

/// Random polygon words over a small vertex pool; each word has length >= 2.
inline words_t random_words(std::mt19937_64& rng, int max_polygons = 6, int max_len = 7, int pool = 8) {
    std::uniform_int_distribution<int> np(1, max_polygons), len(2, max_len), v(0, pool - 1);
    words_t out(static_cast<std::size_t>(np(rng)));
    for (auto& w : out) {
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back("v" + std::to_string(v(rng)));
    }
    return out;
}

/// Random words in which no polygon repeats a vertex.
inline words_t random_set_words(std::mt19937_64& rng, int max_polygons = 6, int pool = 10) {
    std::uniform_int_distribution<int> np(1, max_polygons), len(2, std::min(pool, 6));
    words_t out(static_cast<std::size_t>(np(rng)));
    std::vector<int> ids(static_cast<std::size_t>(pool));
    for (int i = 0; i < pool; ++i) ids[static_cast<std::size_t>(i)] = i;
    for (auto& w : out) {
        std::shuffle(ids.begin(), ids.end(), rng);
        const int l = len(rng);
        for (int i = 0; i < l; ++i) w.push_back("v" + std::to_string(ids[static_cast<std::size_t>(i)]));
    }
    return out;
}

/// Per-vertex occurrence counts per polygon.
inline std::map<std::string, std::map<std::size_t, std::int64_t>> occurrence_table(const words_t& words) {
    std::map<std::string, std::map<std::size_t, std::int64_t>> t;
    for (std::size_t p = 0; p < words.size(); ++p)
        for (const auto& v : words[p]) ++t[v][p];
    return t;
}

/// dim = 2|P| + sum val(val mu - 1), straight from the counts.
inline std::int64_t oracle_dim_lambda(const words_t& words) {
    std::int64_t dim = 2 * static_cast<std::int64_t>(words.size());
    for (const auto& [v, per] : occurrence_table(words)) {
        std::int64_t val = 0;
        for (const auto& [p, f] : per) val += f;
        const std::int64_t mu = val == 1 ? 2 : 1;
        dim += val * (val * mu - 1);
    }
    return dim;
}

/// Closed-form loop count: sum (f - 1) over polygons for a vertex spread over
/// several polygons, f for a vertex confined to one polygon with f >= 2, and
/// 1 for a vertex of valency 1.
inline std::int64_t oracle_loops(const words_t& words) {
    std::int64_t loops = 0;
    for (const auto& [v, per] : occurrence_table(words)) {
        if (per.size() >= 2) {
            for (const auto& [p, f] : per) loops += f - 1;
        } else {
            const auto f = per.begin()->second;
            loops += f >= 2 ? f : 1;
        }
    }
    return loops;
}

inline bool oracle_connected(const words_t& words) {
    std::set<std::size_t> seen{0};
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        auto p = stack.back();
        stack.pop_back();
        for (std::size_t q = 0; q < words.size(); ++q) {
            if (seen.contains(q)) continue;
            bool share = std::any_of(words[p].begin(), words[p].end(), [&](const std::string& v) {
                return std::find(words[q].begin(), words[q].end(), v) != words[q].end();
            });
            if (share) {
                seen.insert(q);
                stack.push_back(q);
            }
        }
    }
    return seen.size() == words.size();
}

inline std::int64_t oracle_dim_center(const words_t& words) {
    auto table = occurrence_table(words);
    std::int64_t mu_sum = 0, singles = 0;
    for (const auto& [v, per] : table) {
        std::int64_t val = 0;
        for (const auto& [p, f] : per) val += f;
        mu_sum += val == 1 ? 2 : 1;
        singles += val == 1 ? 1 : 0;
    }
    return 1 + static_cast<std::int64_t>(words.size()) - static_cast<std::int64_t>(table.size()) + mu_sum +
           oracle_loops(words) - singles;
}

inline constexpr std::array<double, 26> english = {
    0.082, 0.015, 0.028, 0.043, 0.127, 0.022, 0.020, 0.061, 0.070, 0.002, 0.008, 0.040, 0.024,
    0.067, 0.075, 0.019, 0.001, 0.060, 0.063, 0.091, 0.028, 0.010, 0.023, 0.001, 0.020, 0.001,
};

/// Letters drawn independently from the English frequency table.
inline std::string english_sample(std::mt19937_64& rng, std::size_t n) {
    std::discrete_distribution<int> d(english.begin(), english.end());
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>('A' + d(rng)));
    return out;
}

inline std::string uniform_sample(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(0, 25);
    std::string out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>('A' + d(rng)));
    return out;
}

/// Plain shift cipher written independently of the library.
inline std::string oracle_vigenere(const std::string& plain, const std::string& key) {
    std::string out;
    for (std::size_t i = 0; i < plain.size(); ++i) {
        out.push_back(static_cast<char>('A' + ((plain[i] - 'A') + (key[i % key.size()] - 'A')) % 26));
    }
    return out;
}

inline std::string random_key(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<int> d(0, 25);
    std::string k;
    for (std::size_t i = 0; i < m; ++i) k.push_back(static_cast<char>('A' + d(rng)));
    return k;
}

}  // namespace testsupport
