#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauerkit/error.hpp"

namespace brauerkit::cipher {

/// Residue representation of a text over an alphabet of size n.
using residues = std::vector<int>;

/// Ordered set of distinct symbols; a symbol's position is its residue mod n.
class Alphabet {
public:
    explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
        index_.fill(-1);
        if (symbols_.empty()) throw error(errc::validation, "alphabet must be non-empty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            auto c = static_cast<unsigned char>(symbols_[i]);
            if (index_[c] != -1) {
                throw error(errc::validation, std::string("alphabet repeats symbol '") + symbols_[i] + "'");
            }
            index_[c] = static_cast<int>(i);
        }
    }

    [[nodiscard]] static const Alphabet& english() {
        static const Alphabet a("ABCDEFGHIJKLMNOPQRSTUVWXYZ");
        return a;
    }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(symbols_.size()); }
    [[nodiscard]] const std::string& symbols() const noexcept { return symbols_; }
    [[nodiscard]] char symbol(int residue) const { return symbols_.at(static_cast<std::size_t>(residue)); }

    /// Residue of `c`; falls back to the other letter case when `c` itself is
    /// not a symbol.
    [[nodiscard]] std::optional<int> index_of(char c) const noexcept {
        auto uc = static_cast<unsigned char>(c);
        if (index_[uc] >= 0) return index_[uc];
        auto folded = static_cast<unsigned char>(std::isupper(uc) ? std::tolower(uc) : std::toupper(uc));
        if (index_[folded] >= 0) return index_[folded];
        return std::nullopt;
    }

    [[nodiscard]] bool contains(char c) const noexcept { return index_of(c).has_value(); }

    /// Throws parse_error at the first character outside the alphabet.
    [[nodiscard]] residues encode(std::string_view text) const {
        residues out;
        out.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            auto r = index_of(text[i]);
            if (!r) {
                throw parse_error(std::string("character '") + text[i] + "' is not in the alphabet", i);
            }
            out.push_back(*r);
        }
        return out;
    }

    [[nodiscard]] std::string decode(const residues& values) const {
        std::string out;
        out.reserve(values.size());
        for (int r : values) out.push_back(symbol(r));
        return out;
    }

    /// Drops every character outside the alphabet and maps the rest to their
    /// canonical symbol (for A-Z: upper case).
    [[nodiscard]] std::string normalize(std::string_view text) const {
        std::string out;
        for (char c : text) {
            if (auto r = index_of(c)) out.push_back(symbol(*r));
        }
        return out;
    }

private:
    std::string symbols_;
    std::array<int, 256> index_{};
};

[[nodiscard]] inline int mod(int a, int n) noexcept {
    int r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace brauerkit::cipher
