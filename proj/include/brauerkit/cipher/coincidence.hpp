#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string_view>
#include <vector>

#include "brauerkit/cipher/alphabet.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/rational.hpp"

namespace brauerkit::cipher {

/// Symbol counts of any finite sequence.
template <class Range>
[[nodiscard]] auto symbol_counts(const Range& text) {
    using value_type = std::remove_cvref_t<decltype(*std::begin(text))>;
    std::map<value_type, std::int64_t> counts;
    for (const auto& x : text) ++counts[x];
    return counts;
}

/// Probability that two distinct random positions of `text` hold the same
/// symbol: sum f(f-1) / (N(N-1)). Exact.
template <class Range>
[[nodiscard]] Rational index_of_coincidence(const Range& text) {
    const auto n = static_cast<std::int64_t>(std::size(text));
    if (n < 2) throw error(errc::precondition, "index of coincidence needs at least 2 symbols");
    std::int64_t pairs = 0;
    for (const auto& [sym, f] : symbol_counts(text)) pairs += f * (f - 1);
    return Rational(pairs, n * (n - 1));
}

/// Sum f(f-1) over the symbols of `text`; the numerator of the index of
/// coincidence before normalization.
template <class Range>
[[nodiscard]] std::int64_t coincidence_pairs(const Range& text) {
    std::int64_t pairs = 0;
    for (const auto& [sym, f] : symbol_counts(text)) pairs += f * (f - 1);
    return pairs;
}

/// Probability that a random symbol of `a` equals a random symbol of `b`.
template <class RangeA, class RangeB>
[[nodiscard]] Rational mutual_index(const RangeA& a, const RangeB& b) {
    const auto na = static_cast<std::int64_t>(std::size(a));
    const auto nb = static_cast<std::int64_t>(std::size(b));
    if (na == 0 || nb == 0) throw error(errc::precondition, "mutual index needs two non-empty texts");
    auto fa = symbol_counts(a);
    auto fb = symbol_counts(b);
    std::int64_t sum = 0;
    for (const auto& [sym, f] : fa) {
        if (auto it = fb.find(sym); it != fb.end()) sum += f * it->second;
    }
    return Rational(sum, na * nb);
}

/// Mutual index of `a` against `b` shifted by `s`: sum_c f_a(c) f_b(c - s) / (N N').
[[nodiscard]] inline Rational mutual_index_shift(const residues& a, const residues& b, int s, int n) {
    if (a.empty() || b.empty()) throw error(errc::precondition, "mutual index needs two non-empty texts");
    std::vector<std::int64_t> fa(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> fb(static_cast<std::size_t>(n), 0);
    for (int x : a) ++fa[static_cast<std::size_t>(x)];
    for (int x : b) ++fb[static_cast<std::size_t>(x)];
    std::int64_t sum = 0;
    for (int c = 0; c < n; ++c) sum += fa[static_cast<std::size_t>(c)] * fb[static_cast<std::size_t>(mod(c - s, n))];
    return Rational(sum, static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()));
}

/// Splits `text` into the m decimated lists y_1..y_m (list i takes positions
/// i, i+m, i+2m, ...).
template <class Seq>
[[nodiscard]] std::vector<Seq> decimate(const Seq& text, std::size_t m) {
    if (m == 0) throw error(errc::precondition, "key length must be at least 1");
    std::vector<Seq> out(m);
    for (std::size_t i = 0; i < std::size(text); ++i) out[i % m].push_back(text[i]);
    return out;
}

struct MicRow {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<Rational> by_shift;  ///< index s holds MIC(y_i, y_j^s)
};

struct CoincidenceReport {
    Rational text_ioc;
    std::vector<Rational> per_list_ioc;
    std::vector<MicRow> mic_table;  ///< pairs i < j in lexicographic order
};

/// Coincidence statistics of `cipher` for candidate key length m.
[[nodiscard]] inline CoincidenceReport coincidence_report(const residues& cipher, std::size_t m, int n) {
    CoincidenceReport r;
    r.text_ioc = index_of_coincidence(cipher);
    auto lists = decimate(cipher, m);
    for (const auto& l : lists) r.per_list_ioc.push_back(index_of_coincidence(l));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            MicRow row{i, j, {}};
            for (int s = 0; s < n; ++s) row.by_shift.push_back(mutual_index_shift(lists[i], lists[j], s, n));
            r.mic_table.push_back(std::move(row));
        }
    }
    return r;
}

}  // namespace brauerkit::cipher
