#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/multiset.hpp"

namespace brauerkit {

/// Opaque vertex label. Equality is exact label equality.
class VertexId {
public:
    explicit VertexId(std::string label) : label_(std::move(label)) {
        if (label_.empty()) throw error(errc::validation, "vertex label must be non-empty");
    }

    [[nodiscard]] const std::string& label() const noexcept { return label_; }

    auto operator<=>(const VertexId&) const = default;

private:
    std::string label_;
};

/// One occurrence of a vertex: polygon ordinal and position inside its word
/// (both 0-based).
struct Occurrence {
    std::size_t polygon = 0;
    std::size_t position = 0;

    auto operator<=>(const Occurrence&) const = default;
};

class Polygon {
public:
    /// `label` is an optional one-line permutation of word positions,
    /// 1-based. It is carried as metadata only.
    Polygon(std::size_t index, std::vector<VertexId> word, std::optional<std::vector<std::size_t>> label = {})
        : index_(index), word_(std::move(word)), label_(std::move(label)) {
        if (word_.size() < 2) {
            throw error(errc::validation, "polygon " + std::to_string(index_ + 1) + " has " +
                                              std::to_string(word_.size()) +
                                              " occurrence(s); every polygon needs at least 2");
        }
        if (label_) validate_label();
    }

    [[nodiscard]] std::size_t index() const noexcept { return index_; }
    [[nodiscard]] const std::vector<VertexId>& word() const noexcept { return word_; }
    [[nodiscard]] const std::optional<std::vector<std::size_t>>& label() const noexcept { return label_; }
    [[nodiscard]] std::size_t size() const noexcept { return word_.size(); }

    [[nodiscard]] std::size_t frequency(const VertexId& v) const {
        return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), v));
    }

    [[nodiscard]] multiset_map<VertexId> multiset() const { return to_multiset(word_); }

    /// The word with the labeling permutation applied: position i holds
    /// word[label[i] - 1]. Unlabeled polygons return their word.
    [[nodiscard]] std::vector<VertexId> labeled_word() const {
        if (!label_) return word_;
        std::vector<VertexId> out;
        out.reserve(word_.size());
        for (std::size_t p : *label_) out.push_back(word_[p - 1]);
        return out;
    }

private:
    void validate_label() const {
        const auto& perm = *label_;
        if (perm.size() != word_.size()) {
            throw error(errc::validation, "label of polygon " + std::to_string(index_ + 1) + " has length " +
                                              std::to_string(perm.size()) + ", word has " +
                                              std::to_string(word_.size()));
        }
        std::vector<bool> seen(perm.size() + 1, false);
        for (std::size_t p : perm) {
            if (p == 0 || p > perm.size() || seen[p]) {
                throw error(errc::validation,
                            "label of polygon " + std::to_string(index_ + 1) + " is not a permutation");
            }
            seen[p] = true;
        }
    }

    std::size_t index_;
    std::vector<VertexId> word_;
    std::optional<std::vector<std::size_t>> label_;
};

/// A Brauer configuration: an ordered list of polygon words. The list order
/// is the orientation used for every successor sequence. Multiplicity is
/// fixed: mu(v) = 2 when val(v) = 1, otherwise 1.
///
/// Immutable after construction.
class BrauerConfiguration {
public:
    using word_type = std::vector<VertexId>;

    explicit BrauerConfiguration(std::vector<word_type> words,
                                 std::vector<std::optional<std::vector<std::size_t>>> labels = {}) {
        if (words.empty()) throw error(errc::validation, "configuration needs at least one polygon");
        if (!labels.empty() && labels.size() != words.size()) {
            throw error(errc::validation, "label count does not match polygon count");
        }
        polygons_.reserve(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) {
            polygons_.emplace_back(i, std::move(words[i]), labels.empty() ? std::nullopt : std::move(labels[i]));
        }
        index_occurrences();
    }

    /// Convenience constructor from plain label strings.
    [[nodiscard]] static BrauerConfiguration from_words(const std::vector<std::vector<std::string>>& words) {
        std::vector<word_type> typed;
        typed.reserve(words.size());
        for (const auto& w : words) {
            word_type t;
            t.reserve(w.size());
            for (const auto& s : w) t.emplace_back(s);
            typed.push_back(std::move(t));
        }
        return BrauerConfiguration(std::move(typed));
    }

    [[nodiscard]] const std::vector<Polygon>& polygons() const noexcept { return polygons_; }
    [[nodiscard]] std::size_t polygon_count() const noexcept { return polygons_.size(); }

    /// Vertex universe in order of first appearance.
    [[nodiscard]] const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }

    [[nodiscard]] bool contains(const VertexId& v) const { return occurrences_.contains(v); }

    /// All occurrences of `v`, ordered by polygon then by word position.
    [[nodiscard]] const std::vector<Occurrence>& occurrences(const VertexId& v) const {
        auto it = occurrences_.find(v);
        if (it == occurrences_.end()) throw error(errc::not_found, "unknown vertex '" + v.label() + "'");
        return it->second;
    }

    [[nodiscard]] std::size_t valency(const VertexId& v) const { return occurrences(v).size(); }

    [[nodiscard]] std::size_t multiplicity(const VertexId& v) const { return valency(v) == 1 ? 2 : 1; }

    /// Concatenation of the polygon words.
    [[nodiscard]] word_type message() const {
        word_type out;
        for (const auto& p : polygons_) out.insert(out.end(), p.word().begin(), p.word().end());
        return out;
    }

    /// Concatenation of the labeled (permuted) polygon words.
    [[nodiscard]] word_type labeled_message() const {
        word_type out;
        for (const auto& p : polygons_) {
            auto w = p.labeled_word();
            out.insert(out.end(), w.begin(), w.end());
        }
        return out;
    }

    [[nodiscard]] std::vector<word_type> words() const {
        std::vector<word_type> out;
        out.reserve(polygons_.size());
        for (const auto& p : polygons_) out.push_back(p.word());
        return out;
    }

    /// The configuration with polygon `index` removed. Throws when nothing
    /// would remain.
    [[nodiscard]] BrauerConfiguration without_polygon(std::size_t index) const {
        if (index >= polygons_.size()) throw error(errc::not_found, "no polygon " + std::to_string(index + 1));
        auto w = words();
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(index));
        return BrauerConfiguration(std::move(w));
    }

    friend bool operator==(const BrauerConfiguration& a, const BrauerConfiguration& b) {
        if (a.polygons_.size() != b.polygons_.size()) return false;
        for (std::size_t i = 0; i < a.polygons_.size(); ++i) {
            if (a.polygons_[i].word() != b.polygons_[i].word()) return false;
            if (a.polygons_[i].label() != b.polygons_[i].label()) return false;
        }
        return true;
    }

private:
    void index_occurrences() {
        for (const auto& poly : polygons_) {
            for (std::size_t pos = 0; pos < poly.size(); ++pos) {
                const VertexId& v = poly.word()[pos];
                auto [it, inserted] = occurrences_.try_emplace(v);
                if (inserted) vertices_.push_back(v);
                it->second.push_back({poly.index(), pos});
            }
        }
    }

    std::vector<Polygon> polygons_;
    std::vector<VertexId> vertices_;
    std::map<VertexId, std::vector<Occurrence>> occurrences_;
};

/// The linear order of a vertex's occurrences; closed into a circular order
/// by the quiver construction.
struct SuccessorSequence {
    VertexId vertex;
    std::vector<Occurrence> entries;
};

[[nodiscard]] inline std::size_t valency(const BrauerConfiguration& config, const VertexId& v) {
    return config.valency(v);
}

[[nodiscard]] inline SuccessorSequence successor_sequence(const BrauerConfiguration& config, const VertexId& v) {
    return {v, config.occurrences(v)};
}

}  // namespace brauerkit
