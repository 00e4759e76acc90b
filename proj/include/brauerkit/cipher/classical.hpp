#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerkit/cipher/alphabet.hpp"
#include "brauerkit/error.hpp"

namespace brauerkit::cipher {

// ---------------------------------------------------------------------------
// Vigenere

class VigenereKey {
public:
    VigenereKey(residues shifts, int alphabet_size) : shifts_(std::move(shifts)) {
        if (shifts_.empty()) throw error(errc::validation, "Vigenere key must be non-empty");
        for (int s : shifts_) {
            if (s < 0 || s >= alphabet_size) {
                throw error(errc::validation, "key residue " + std::to_string(s) + " outside [0, " +
                                                  std::to_string(alphabet_size) + ")");
            }
        }
    }

    [[nodiscard]] static VigenereKey from_text(std::string_view key, const Alphabet& alphabet = Alphabet::english()) {
        if (key.empty()) throw error(errc::validation, "Vigenere key must be non-empty");
        return VigenereKey(alphabet.encode(key), alphabet.size());
    }

    [[nodiscard]] const residues& shifts() const noexcept { return shifts_; }
    [[nodiscard]] std::size_t length() const noexcept { return shifts_.size(); }

    [[nodiscard]] std::string to_text(const Alphabet& alphabet = Alphabet::english()) const {
        return alphabet.decode(shifts_);
    }

    friend bool operator==(const VigenereKey&, const VigenereKey&) = default;

private:
    residues shifts_;
};

namespace detail {

inline residues vigenere_shift(const residues& text, const VigenereKey& key, int sign, int n) {
    residues out(text.size());
    const auto& k = key.shifts();
    for (std::size_t i = 0; i < text.size(); ++i) out[i] = mod(text[i] + sign * k[i % k.size()], n);
    return out;
}

}  // namespace detail

[[nodiscard]] inline residues vigenere_encrypt(const residues& plain, const VigenereKey& key, int n) {
    return detail::vigenere_shift(plain, key, +1, n);
}

[[nodiscard]] inline residues vigenere_decrypt(const residues& cipher, const VigenereKey& key, int n) {
    return detail::vigenere_shift(cipher, key, -1, n);
}

/// Position i is shifted by key[i mod m]. Lower-case input is folded; any
/// other character outside the alphabet throws parse_error with its offset.
[[nodiscard]] inline std::string vigenere_encrypt(std::string_view plain, const VigenereKey& key,
                                                  const Alphabet& alphabet = Alphabet::english()) {
    return alphabet.decode(vigenere_encrypt(alphabet.encode(plain), key, alphabet.size()));
}

[[nodiscard]] inline std::string vigenere_decrypt(std::string_view cipher, const VigenereKey& key,
                                                  const Alphabet& alphabet = Alphabet::english()) {
    return alphabet.decode(vigenere_decrypt(alphabet.encode(cipher), key, alphabet.size()));
}

// ---------------------------------------------------------------------------
// Block transposition

/// A permutation of {1..s} in one-line notation. Encryption of a block x
/// yields (x_{pi(1)}, ..., x_{pi(s)}).
class BlockPermutation {
public:
    explicit BlockPermutation(std::vector<std::size_t> oneline) : oneline_(std::move(oneline)) {
        if (oneline_.empty()) throw error(errc::validation, "permutation must be non-empty");
        std::vector<bool> seen(oneline_.size() + 1, false);
        for (std::size_t p : oneline_) {
            if (p == 0 || p > oneline_.size() || seen[p]) {
                throw error(errc::validation, "not a permutation of 1.." + std::to_string(oneline_.size()));
            }
            seen[p] = true;
        }
    }

    [[nodiscard]] static BlockPermutation identity(std::size_t s) {
        std::vector<std::size_t> v(s);
        for (std::size_t i = 0; i < s; ++i) v[i] = i + 1;
        return BlockPermutation(std::move(v));
    }

    [[nodiscard]] std::size_t size() const noexcept { return oneline_.size(); }
    [[nodiscard]] const std::vector<std::size_t>& oneline() const noexcept { return oneline_; }

    [[nodiscard]] BlockPermutation inverse() const {
        std::vector<std::size_t> inv(oneline_.size());
        for (std::size_t i = 0; i < oneline_.size(); ++i) inv[oneline_[i] - 1] = i + 1;
        return BlockPermutation(std::move(inv));
    }

    template <class Seq>
    [[nodiscard]] Seq apply(const Seq& block) const {
        if (block.size() != oneline_.size()) {
            throw error(errc::validation, "block of length " + std::to_string(block.size()) +
                                              " does not match permutation of length " +
                                              std::to_string(oneline_.size()));
        }
        Seq out = block;
        for (std::size_t i = 0; i < oneline_.size(); ++i) out[i] = block[oneline_[i] - 1];
        return out;
    }

    friend bool operator==(const BlockPermutation&, const BlockPermutation&) = default;

private:
    std::vector<std::size_t> oneline_;
};

/// Cuts `text` into consecutive blocks of the given sizes; the sizes must
/// partition the text exactly.
[[nodiscard]] inline std::vector<std::string> split_blocks(std::string_view text,
                                                           const std::vector<std::size_t>& sizes) {
    std::vector<std::string> out;
    std::size_t at = 0;
    for (std::size_t s : sizes) {
        if (at + s > text.size()) break;
        out.emplace_back(text.substr(at, s));
        at += s;
    }
    if (at != text.size() || out.size() != sizes.size()) {
        throw error(errc::validation, "block sizes do not partition a text of length " +
                                          std::to_string(text.size()));
    }
    return out;
}

[[nodiscard]] inline std::string transposition_encrypt(const std::vector<std::string>& blocks,
                                                       const std::vector<BlockPermutation>& perms) {
    if (blocks.size() != perms.size()) {
        throw error(errc::validation, std::to_string(blocks.size()) + " blocks but " +
                                          std::to_string(perms.size()) + " permutations");
    }
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) out += perms[i].apply(blocks[i]);
    return out;
}

[[nodiscard]] inline std::string transposition_decrypt(const std::vector<std::string>& blocks,
                                                       const std::vector<BlockPermutation>& perms) {
    std::vector<BlockPermutation> inverses;
    inverses.reserve(perms.size());
    for (const auto& p : perms) inverses.push_back(p.inverse());
    return transposition_encrypt(blocks, inverses);
}

/// Block sizes implied by a permutation list.
[[nodiscard]] inline std::vector<std::size_t> block_sizes(const std::vector<BlockPermutation>& perms) {
    std::vector<std::size_t> out;
    out.reserve(perms.size());
    for (const auto& p : perms) out.push_back(p.size());
    return out;
}

// ---------------------------------------------------------------------------
// Route reading

struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A rows x cols character grid, stored row-major.
class Grid {
public:
    Grid(std::size_t rows, std::size_t cols, std::string cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ == 0 || cols_ == 0) throw error(errc::validation, "grid must be non-empty");
        if (cells_.size() != rows_ * cols_) {
            throw error(errc::validation, "grid needs " + std::to_string(rows_ * cols_) + " characters, got " +
                                              std::to_string(cells_.size()));
        }
    }

    /// Grid from equal-length row strings.
    [[nodiscard]] static Grid from_rows(const std::vector<std::string>& rows) {
        if (rows.empty()) throw error(errc::validation, "grid must be non-empty");
        std::string cells;
        for (const auto& r : rows) {
            if (r.size() != rows.front().size()) throw error(errc::validation, "grid rows differ in length");
            cells += r;
        }
        return Grid(rows.size(), rows.front().size(), std::move(cells));
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] char at(Cell c) const { return cells_.at(c.row * cols_ + c.col); }
    [[nodiscard]] char& at(Cell c) { return cells_.at(c.row * cols_ + c.col); }

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::string cells_;
};

/// An ordered walk that visits every cell of a rows x cols grid exactly once.
class RouteSpec {
public:
    RouteSpec(std::size_t rows, std::size_t cols, std::vector<Cell> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        std::vector<bool> seen(rows_ * cols_, false);
        for (const auto& c : cells_) {
            if (c.row >= rows_ || c.col >= cols_) throw error(errc::validation, "route leaves the grid");
            auto k = c.row * cols_ + c.col;
            if (seen[k]) {
                throw error(errc::validation, "route visits cell (" + std::to_string(c.row + 1) + "," +
                                                  std::to_string(c.col + 1) + ") twice");
            }
            seen[k] = true;
        }
        if (cells_.size() != rows_ * cols_) throw error(errc::validation, "route does not cover the grid");
    }

    [[nodiscard]] static RouteSpec row_major(std::size_t rows, std::size_t cols) {
        std::vector<Cell> cells;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) cells.push_back({r, c});
        return RouteSpec(rows, cols, std::move(cells));
    }

    /// Column 1 downwards, column 2 upwards, and so on.
    [[nodiscard]] static RouteSpec column_boustrophedon(std::size_t rows, std::size_t cols) {
        std::vector<Cell> cells;
        for (std::size_t c = 0; c < cols; ++c) {
            for (std::size_t i = 0; i < rows; ++i) cells.push_back({c % 2 == 0 ? i : rows - 1 - i, c});
        }
        return RouteSpec(rows, cols, std::move(cells));
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const std::vector<Cell>& cells() const noexcept { return cells_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cell> cells_;
};

[[nodiscard]] inline std::string route_read(const Grid& grid, const RouteSpec& route) {
    if (grid.rows() != route.rows() || grid.cols() != route.cols()) {
        throw error(errc::validation, "route shape does not match grid shape");
    }
    std::string out;
    out.reserve(route.cells().size());
    for (const auto& c : route.cells()) out.push_back(grid.at(c));
    return out;
}

/// Inverse of route_read: lays `text` into the grid along the route.
[[nodiscard]] inline Grid route_write(std::string_view text, const RouteSpec& route) {
    if (text.size() != route.cells().size()) {
        throw error(errc::validation, "text length does not match route length");
    }
    Grid g(route.rows(), route.cols(), std::string(text.size(), ' '));
    for (std::size_t i = 0; i < text.size(); ++i) g.at(route.cells()[i]) = text[i];
    return g;
}

}  // namespace brauerkit::cipher
