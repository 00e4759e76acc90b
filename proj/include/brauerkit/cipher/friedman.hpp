#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "brauerkit/cipher/alphabet.hpp"
#include "brauerkit/cipher/classical.hpp"
#include "brauerkit/cipher/coincidence.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/rational.hpp"

namespace brauerkit::cipher {

/// Expected index of coincidence of English text.
inline constexpr double english_ioc = 0.065;
/// Half-width of the window around english_ioc used to flag a key length.
inline constexpr double ioc_window = 0.01;

/// Relative letter frequencies of English, A..Z.
inline constexpr std::array<double, 26> english_frequencies = {
    0.082, 0.015, 0.028, 0.043, 0.127, 0.022, 0.020, 0.061, 0.070, 0.002, 0.008, 0.040, 0.024,
    0.067, 0.075, 0.019, 0.001, 0.060, 0.063, 0.091, 0.028, 0.010, 0.023, 0.001, 0.020, 0.001,
};

struct KeyLengthCandidate {
    std::size_t m = 0;
    std::vector<Rational> per_list_ioc;
    double score = 0.0;  ///< mean |IoC(list) - english_ioc|
    bool flagged = false;  ///< every list lies within english_ioc +- ioc_window
    /// Smaller flagged key lengths dividing m; m may be a multiple of the
    /// true length.
    std::vector<std::size_t> flagged_divisors;
};

/// Ranks key lengths 1..max_len by how close the decimated lists come to the
/// English index of coincidence. Ascending score, ties broken by smaller m.
[[nodiscard]] inline std::vector<KeyLengthCandidate> friedman_keylength(const residues& cipher, std::size_t max_len) {
    if (max_len == 0) throw error(errc::precondition, "maximum key length must be at least 1");
    if (cipher.size() < 2 * max_len) {
        throw error(errc::precondition, "ciphertext of length " + std::to_string(cipher.size()) +
                                            " is too short for key lengths up to " + std::to_string(max_len));
    }
    std::vector<KeyLengthCandidate> out;
    for (std::size_t m = 1; m <= max_len; ++m) {
        KeyLengthCandidate c;
        c.m = m;
        double total = 0.0;
        c.flagged = true;
        for (const auto& list : decimate(cipher, m)) {
            auto ioc = index_of_coincidence(list);
            const double dev = std::abs(to_double(ioc) - english_ioc);
            total += dev;
            c.flagged = c.flagged && dev <= ioc_window;
            c.per_list_ioc.push_back(ioc);
        }
        c.score = total / static_cast<double>(m);
        out.push_back(std::move(c));
    }
    for (auto& c : out) {
        for (const auto& d : out) {
            if (d.m < c.m && c.m % d.m == 0 && d.flagged) c.flagged_divisors.push_back(d.m);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.score != b.score ? a.score < b.score : a.m < b.m;
    });
    return out;
}

[[nodiscard]] inline std::vector<KeyLengthCandidate> friedman_keylength(std::string_view cipher, std::size_t max_len,
                                                                        const Alphabet& alphabet = Alphabet::english()) {
    return friedman_keylength(alphabet.encode(cipher), max_len);
}

/// One equation k_i - k_j = shift (mod n), lists numbered from 0.
struct DifferenceEquation {
    std::size_t i = 0;
    std::size_t j = 0;
    int shift = 0;
};

/// Solves a system of key differences anchored at k_0 = anchor. Throws
/// errc::precondition when the system leaves a list undetermined or when an
/// equation is violated; the message reports the residual
/// (k_i - k_j - shift) mod n of the first violated equation.
[[nodiscard]] inline residues solve_differences(std::size_t m, const std::vector<DifferenceEquation>& equations,
                                                int anchor, int n) {
    if (m == 0) throw error(errc::precondition, "key length must be at least 1");
    std::vector<int> k(m, -1);
    k[0] = mod(anchor, n);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto at = queue.front();
        queue.pop_front();
        for (const auto& e : equations) {
            if (e.i >= m || e.j >= m) throw error(errc::precondition, "equation references a list beyond m");
            if (e.i == at && k[e.j] < 0) {
                k[e.j] = mod(k[e.i] - e.shift, n);
                queue.push_back(e.j);
            } else if (e.j == at && k[e.i] < 0) {
                k[e.i] = mod(k[e.j] + e.shift, n);
                queue.push_back(e.i);
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (k[i] < 0) throw error(errc::precondition, "key residue " + std::to_string(i + 1) + " is undetermined");
    }
    for (const auto& e : equations) {
        const int residual = mod(k[e.i] - k[e.j] - e.shift, n);
        if (residual != 0) {
            throw error(errc::precondition, "inconsistent difference system: k" + std::to_string(e.i + 1) + " - k" +
                                                std::to_string(e.j + 1) + " = " + std::to_string(e.shift) +
                                                " fails with cycle residual " + std::to_string(residual));
        }
    }
    return k;
}

/// Chi-squared distance of a text's letter counts from English.
[[nodiscard]] inline double chi_squared_english(const residues& text) {
    std::array<double, 26> counts{};
    for (int x : text) counts.at(static_cast<std::size_t>(x)) += 1.0;
    const auto n = static_cast<double>(text.size());
    double chi2 = 0.0;
    for (std::size_t c = 0; c < 26; ++c) {
        const double expected = n * english_frequencies[c];
        const double d = counts[c] - expected;
        chi2 += d * d / expected;
    }
    return chi2;
}

struct KeyCandidate {
    VigenereKey key;
    double chi2 = 0.0;
};

struct KeyRecovery {
    std::vector<DifferenceEquation> equations;  ///< best shift for every pair i < j
    residues offsets;                           ///< k_j - k_0 chosen by consensus
    std::size_t cycle_residual = 0;             ///< pair equations the offsets violate
    std::vector<KeyCandidate> candidates;       ///< all 26 anchors, ascending chi2
};

/// Recovers a Vigenere key of known length m from English ciphertext.
///
/// For every pair of decimated lists the shift maximizing the mutual index
/// gives an equation k_i - k_j = s. Pairwise equations from noisy lists need
/// not agree, so offsets relative to k_0 are fixed by coordinate ascent on
/// the total mutual index over all pairs; disagreements are counted in
/// `cycle_residual`. Each of the 26 anchors k_0 then yields a key, ranked by
/// the chi-squared fit of its decryption to English.
[[nodiscard]] inline KeyRecovery friedman_recover_key(const residues& cipher, std::size_t m) {
    constexpr int n = 26;
    if (m == 0) throw error(errc::precondition, "key length must be at least 1");
    auto lists = decimate(cipher, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (lists[i].size() < 2) {
            throw error(errc::precondition, "list " + std::to_string(i + 1) + " has fewer than 2 symbols");
        }
    }

    // mic[i][j][s] = MIC(y_i, y_j^s)
    std::vector<std::vector<std::vector<double>>> mic(m, std::vector<std::vector<double>>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            mic[i][j].resize(n);
            for (int s = 0; s < n; ++s) mic[i][j][static_cast<std::size_t>(s)] = to_double(mutual_index_shift(lists[i], lists[j], s, n));
        }
    }

    KeyRecovery out;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& row = mic[i][j];
            auto best = std::max_element(row.begin(), row.end()) - row.begin();
            out.equations.push_back({i, j, static_cast<int>(best)});
        }
    }

    residues d(m, 0);
    for (const auto& e : out.equations) {
        if (e.i == 0) d[e.j] = mod(-e.shift, n);
    }
    for (std::size_t round = 0; round < m + 1; ++round) {
        bool changed = false;
        for (std::size_t j = 1; j < m; ++j) {
            int best_t = d[j];
            double best_sum = -1.0;
            for (int t = 0; t < n; ++t) {
                double sum = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    if (i != j) sum += mic[i][j][static_cast<std::size_t>(mod(d[i] - t, n))];
                }
                if (sum > best_sum + 1e-12) {
                    best_sum = sum;
                    best_t = t;
                }
            }
            if (best_t != d[j]) {
                d[j] = best_t;
                changed = true;
            }
        }
        if (!changed) break;
    }
    out.offsets = d;
    for (const auto& e : out.equations) {
        if (mod(d[e.i] - d[e.j], n) != e.shift) ++out.cycle_residual;
    }

    for (int anchor = 0; anchor < n; ++anchor) {
        residues k(m);
        for (std::size_t j = 0; j < m; ++j) k[j] = mod(anchor + d[j], n);
        VigenereKey key(k, n);
        out.candidates.push_back({key, chi_squared_english(vigenere_decrypt(cipher, key, n))});
    }
    std::stable_sort(out.candidates.begin(), out.candidates.end(),
                     [](const auto& a, const auto& b) { return a.chi2 < b.chi2; });
    return out;
}

[[nodiscard]] inline KeyRecovery friedman_recover_key(std::string_view cipher, std::size_t m) {
    return friedman_recover_key(Alphabet::english().encode(cipher), m);
}

}  // namespace brauerkit::cipher
