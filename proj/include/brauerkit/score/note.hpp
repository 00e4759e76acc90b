#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauerkit/error.hpp"

namespace brauerkit::score {

enum class Accidental { none, flat, sharp, natural };

enum class Clef { treble, bass, alto };

[[nodiscard]] inline std::string_view to_string(Clef c) noexcept {
    switch (c) {
        case Clef::treble: return "treble";
        case Clef::bass: return "bass";
        case Clef::alto: return "alto";
    }
    return "treble";
}

[[nodiscard]] inline std::optional<Clef> clef_from_string(std::string_view s) noexcept {
    if (s == "treble") return Clef::treble;
    if (s == "bass") return Clef::bass;
    if (s == "alto") return Clef::alto;
    return std::nullopt;
}

/// Letter at vertical offset 0: e for treble, d for bass, a for alto.
[[nodiscard]] constexpr char clef_reference(Clef c) noexcept {
    switch (c) {
        case Clef::treble: return 'e';
        case Clef::bass: return 'd';
        case Clef::alto: return 'a';
    }
    return 'e';
}

enum class GroupKind { bracket, paren, brace };

/// One note or rest. `exponent` counts sixty-fourths: 64 is a whole note,
/// 1 a sixty-fourth. A dot multiplies the duration by 3/2.
struct NoteEvent {
    bool rest = false;
    char letter = 0;  ///< 'a'..'g'; 0 for rests
    Accidental accidental = Accidental::none;
    int exponent = 16;
    bool dotted = false;
    std::vector<std::size_t> groups;  ///< indices into Score::groups
    std::size_t line = 0;
    std::size_t column = 0;

    [[nodiscard]] int duration() const noexcept { return dotted ? exponent * 3 / 2 : exponent; }

    /// Canonical DSL token and vertex label, e.g. "-g8", "b16.", "=c8", "r16".
    [[nodiscard]] std::string label() const {
        std::string out;
        if (rest) {
            out = "r";
        } else {
            switch (accidental) {
                case Accidental::flat: out += '-'; break;
                case Accidental::sharp: out += '+'; break;
                case Accidental::natural: out += '='; break;
                case Accidental::none: break;
            }
            out += letter;
        }
        out += std::to_string(exponent);
        if (dotted) out += '.';
        return out;
    }

    /// Two events fall into the same class iff duration, dot, accidental and
    /// pitch letter agree. Octave and grouping are ignored.
    [[nodiscard]] bool same_class(const NoteEvent& o) const noexcept {
        return rest == o.rest && letter == o.letter && accidental == o.accidental && exponent == o.exponent &&
               dotted == o.dotted;
    }
};

namespace detail {

inline bool valid_exponent(int e) noexcept { return e == 1 || e == 2 || e == 4 || e == 8 || e == 16 || e == 32 || e == 64; }

}  // namespace detail

/// Reads one note or rest token. Returns nullopt when `tok` is not of the
/// form [-+=]?[a-g]<dur>.? or r<dur>.?; throws validation for a dotted
/// sixty-fourth.
[[nodiscard]] inline std::optional<NoteEvent> parse_note_token(std::string_view tok) {
    NoteEvent ev;
    std::size_t i = 0;
    if (i < tok.size() && tok[i] == 'r') {
        ev.rest = true;
        ++i;
    } else {
        if (i < tok.size() && (tok[i] == '-' || tok[i] == '+' || tok[i] == '=')) {
            ev.accidental = tok[i] == '-' ? Accidental::flat : tok[i] == '+' ? Accidental::sharp : Accidental::natural;
            ++i;
        }
        if (i >= tok.size() || tok[i] < 'a' || tok[i] > 'g') return std::nullopt;
        ev.letter = tok[i++];
    }
    const std::size_t digits = i;
    int value = 0;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9' && i - digits < 2) value = value * 10 + (tok[i++] - '0');
    if (i == digits || !detail::valid_exponent(value) || (i - digits == 2 && tok[digits] == '0')) return std::nullopt;
    ev.exponent = value;
    if (i < tok.size() && tok[i] == '.') {
        ev.dotted = true;
        ++i;
    }
    if (i != tok.size()) return std::nullopt;
    if (ev.dotted && ev.exponent == 1) {
        throw error(errc::validation, "a dotted sixty-fourth has no whole-unit duration");
    }
    return ev;
}

/// Advances the pitch letter k steps around a<b<...<g<a.
[[nodiscard]] inline NoteEvent step_pitch(NoteEvent ev, int k) {
    if (ev.rest) throw error(errc::precondition, "cannot step the pitch of a rest");
    int r = (ev.letter - 'a' + k) % 7;
    if (r < 0) r += 7;
    ev.letter = static_cast<char>('a' + r);
    return ev;
}

[[nodiscard]] inline NoteEvent apply_accidental(NoteEvent ev, Accidental a) {
    if (ev.rest) throw error(errc::precondition, "cannot apply an accidental to a rest");
    ev.accidental = a;
    return ev;
}

}  // namespace brauerkit::score
