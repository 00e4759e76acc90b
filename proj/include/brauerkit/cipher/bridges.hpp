#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "brauerkit/cipher/classical.hpp"
#include "brauerkit/cipher/coincidence.hpp"
#include "brauerkit/configuration.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/invariants.hpp"
#include "brauerkit/rational.hpp"

namespace brauerkit::cipher {

namespace detail {

inline BrauerConfiguration::word_type to_word(std::string_view chars) {
    BrauerConfiguration::word_type w;
    w.reserve(chars.size());
    for (char c : chars) w.emplace_back(std::string(1, c));
    return w;
}

}  // namespace detail

/// The m decimated lists of `cipher` as polygons, characters as vertices.
[[nodiscard]] inline BrauerConfiguration vigenere_to_config(std::string_view cipher, std::size_t m) {
    if (m == 0) throw error(errc::precondition, "key length must be at least 1");
    auto lists = decimate(std::string(cipher), m);
    std::vector<BrauerConfiguration::word_type> words;
    for (std::size_t i = 0; i < m; ++i) {
        if (lists[i].size() < 2) {
            throw error(errc::precondition, "list y" + std::to_string(i + 1) + " has " +
                                                std::to_string(lists[i].size()) + " characters; at least 2 needed");
        }
        words.push_back(detail::to_word(lists[i]));
    }
    return BrauerConfiguration(std::move(words));
}

/// (dim Lambda - 2m) / (N(N-1)). Equals the index of coincidence exactly when
/// no character occurs only once.
[[nodiscard]] inline Rational brauer_ioc(std::string_view cipher, std::size_t m) {
    const auto n = static_cast<std::int64_t>(cipher.size());
    const auto dim = dim_lambda(vigenere_to_config(cipher, m));
    return Rational(dim - 2 * static_cast<std::int64_t>(m), n * (n - 1));
}

/// Consecutive blocks of the given sizes as polygons.
[[nodiscard]] inline BrauerConfiguration transposition_to_config(std::string_view text,
                                                                 const std::vector<std::size_t>& sizes) {
    for (std::size_t s : sizes) {
        if (s < 2) throw error(errc::precondition, "block sizes must be at least 2");
    }
    std::vector<BrauerConfiguration::word_type> words;
    for (const auto& b : split_blocks(text, sizes)) words.push_back(detail::to_word(b));
    return BrauerConfiguration(std::move(words));
}

struct PermutationVerdict {
    std::string plaintext;
    std::string ciphertext;
    AlgebraInvariants plain;
    AlgebraInvariants cipher;
    [[nodiscard]] bool holds() const { return plain == cipher; }
};

/// Encrypts `plain` block by block and compares the invariants of both
/// configurations field by field.
[[nodiscard]] inline PermutationVerdict check_theorem_permutation(std::string_view plain,
                                                                  const std::vector<BlockPermutation>& perms) {
    auto sizes = block_sizes(perms);
    PermutationVerdict v;
    v.plaintext = std::string(plain);
    v.ciphertext = transposition_encrypt(split_blocks(plain, sizes), perms);
    v.plain = invariants(transposition_to_config(v.plaintext, sizes));
    v.cipher = invariants(transposition_to_config(v.ciphertext, sizes));
    return v;
}

/// Outcome of checking one side of an identity against the other. When the
/// precondition fails both sides are still evaluated and the offending
/// characters listed.
struct IdentityVerdict {
    bool precondition = false;
    std::vector<char> violating;  ///< sorted
    std::optional<Rational> lhs;  ///< empty when the configuration is disconnected
    Rational rhs;
    [[nodiscard]] bool identity_holds() const { return lhs && *lhs == rhs; }
    [[nodiscard]] bool holds() const { return precondition && identity_holds(); }
    [[nodiscard]] std::optional<Rational> gap() const {
        if (!lhs) return std::nullopt;
        return *lhs - rhs;
    }
};

/// dim Lambda = 2m + N(N-1) IoC, for ciphertexts in which every character
/// occurs at least twice.
[[nodiscard]] inline IdentityVerdict check_theorem_v1(std::string_view cipher, std::size_t m) {
    IdentityVerdict v;
    for (const auto& [c, f] : symbol_counts(cipher)) {
        if (f < 2) v.violating.push_back(c);
    }
    v.precondition = v.violating.empty();
    const auto n = static_cast<std::int64_t>(cipher.size());
    v.lhs = Rational(dim_lambda(vigenere_to_config(cipher, m)));
    v.rhs = Rational(2 * static_cast<std::int64_t>(m)) + Rational(n * (n - 1)) * index_of_coincidence(cipher);
    return v;
}

/// dim Z = 1 + m + sum_i sum_j (f_ij - 1), for ciphertexts in which every
/// character occurs at least twice and in at least two lists. A disconnected
/// split fails the precondition and leaves the left side empty.
[[nodiscard]] inline IdentityVerdict check_theorem_v2(std::string_view cipher, std::size_t m) {
    IdentityVerdict v;
    auto lists = decimate(std::string(cipher), m);
    std::map<char, std::set<std::size_t>> lists_of;
    std::int64_t excess = 0;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        for (const auto& [c, f] : symbol_counts(lists[i])) {
            lists_of[c].insert(i);
            excess += f - 1;
        }
    }
    auto total = symbol_counts(cipher);
    for (const auto& [c, in] : lists_of) {
        if (total[c] < 2 || in.size() < 2) v.violating.push_back(c);
    }
    auto config = vigenere_to_config(cipher, m);
    v.precondition = v.violating.empty() && is_connected(config);
    if (is_connected(config)) v.lhs = Rational(dim_center(config));
    v.rhs = Rational(1 + static_cast<std::int64_t>(m) + excess);
    return v;
}

}  // namespace brauerkit::cipher
