#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brauerkit/error.hpp"
#include "brauerkit/score/note.hpp"

namespace brauerkit::score {

struct TimeSignature {
    int numerator = 4;
    int denominator = 4;  ///< a power of two, at most 64

    /// Sixty-fourths per measure: n * 2^(6-m) for n/2^m.
    [[nodiscard]] int measure_units() const noexcept { return numerator * (64 / denominator); }

    [[nodiscard]] std::string to_string() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }

    friend bool operator==(const TimeSignature&, const TimeSignature&) = default;
};

struct Group {
    GroupKind kind = GroupKind::bracket;
    std::size_t line = 0;
    std::size_t column = 0;
    bool closed = false;
};

struct Measure {
    std::vector<NoteEvent> events;
    std::size_t line = 0;

    [[nodiscard]] int duration() const noexcept {
        int sum = 0;
        for (const auto& e : events) sum += e.duration();
        return sum;
    }
};

struct ScoreHeader {
    Clef clef = Clef::treble;
    TimeSignature time;
    std::optional<char> reference;  ///< overrides the clef's letter at offset 0
    std::string key;                ///< accidental conventions, carried as metadata

    [[nodiscard]] char reference_letter() const noexcept { return reference ? *reference : clef_reference(clef); }
};

struct Score {
    ScoreHeader header;
    std::vector<Measure> measures;
    std::vector<Group> groups;
    std::vector<std::string> warnings;

    [[nodiscard]] std::size_t event_count() const noexcept {
        std::size_t n = 0;
        for (const auto& m : measures) n += m.events.size();
        return n;
    }
};

struct ParseOptions {
    /// Report measure-length and group-balance problems as warnings instead
    /// of failing.
    bool lax = false;
};

namespace detail {

enum class TokKind { note, bar, open, close, repeat_open, repeat_close, header };

struct Token {
    TokKind kind = TokKind::note;
    GroupKind group = GroupKind::bracket;
    std::string text;
    int repeat = 0;
    std::size_t line = 0;
    std::size_t column = 0;
    std::size_t offset = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        bool header = true;
        while (skip_blank()) {
            Token t = start();
            const char c = src_[pos_];
            if (c == '|') {
                t.kind = TokKind::bar;
                advance();
            } else if (c == '[' || c == '(') {
                t.kind = TokKind::open;
                t.group = c == '[' ? GroupKind::bracket : GroupKind::paren;
                advance();
            } else if (c == ']' || c == ')') {
                t.kind = TokKind::close;
                t.group = c == ']' ? GroupKind::bracket : GroupKind::paren;
                advance();
            } else if (c == '{') {
                t.kind = TokKind::repeat_open;
                t.group = GroupKind::brace;
                advance();
            } else if (c == '}') {
                advance();
                t.kind = TokKind::repeat_close;
                t.group = GroupKind::brace;
                t.repeat = repeat_count(t);
            } else {
                t.text = word();
                if (header && is_header(t.text)) {
                    t.kind = TokKind::header;
                } else {
                    std::optional<NoteEvent> ev;
                    try {
                        ev = parse_note_token(t.text);
                    } catch (const error& e) {
                        throw parse_error(e.what(), t.offset, t.line, t.column);
                    }
                    if (!ev) throw parse_error("unknown token '" + t.text + "'", t.offset, t.line, t.column);
                }
            }
            if (t.kind != TokKind::header) header = false;
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    static bool is_special(char c) { return c == '|' || c == '[' || c == ']' || c == '(' || c == ')' || c == '{' || c == '}' || c == '#'; }

    static bool is_header(std::string_view w) {
        auto eq = w.find('=');
        if (eq == std::string_view::npos || eq < 2 || eq + 1 == w.size()) return false;
        for (std::size_t i = 0; i < eq; ++i)
            if (!std::islower(static_cast<unsigned char>(w[i]))) return false;
        return true;
    }

    // Skips whitespace and comments; false at end of input.
    bool skip_blank() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return true;
            }
        }
        return false;
    }

    Token start() const {
        Token t;
        t.line = line_;
        t.column = column_;
        t.offset = pos_;
        return t;
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string word() {
        std::string w;
        while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) && !is_special(src_[pos_])) {
            w += src_[pos_];
            advance();
        }
        return w;
    }

    int repeat_count(const Token& t) {
        if (pos_ >= src_.size() || src_[pos_] != 'x') {
            throw parse_error("brace group must end with '}x<N>'", t.offset, t.line, t.column);
        }
        advance();
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        int n = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + begin, src_.data() + pos_, n);
        if (ec != std::errc{} || begin == pos_ || n < 1) {
            throw parse_error("repeat count must be a positive integer", t.offset, t.line, t.column);
        }
        (void)ptr;
        return n;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

// Expands {..}xN by copying the enclosed tokens N times. Each copy is
// wrapped in brace open/close tokens so that group membership survives.
inline std::vector<Token> expand_repeats(const std::vector<Token>& in, std::size_t& i, const Token* opener) {
    std::vector<Token> body;
    while (i < in.size()) {
        const Token& t = in[i++];
        if (t.kind == TokKind::repeat_open) {
            auto inner = expand_repeats(in, i, &t);
            body.insert(body.end(), inner.begin(), inner.end());
        } else if (t.kind == TokKind::repeat_close) {
            if (!opener) throw parse_error("'}' without matching '{'", t.offset, t.line, t.column);
            std::vector<Token> out;
            for (int k = 0; k < t.repeat; ++k) {
                Token open = *opener;
                open.kind = TokKind::open;
                out.push_back(open);
                out.insert(out.end(), body.begin(), body.end());
                Token close = t;
                close.kind = TokKind::close;
                out.push_back(close);
            }
            return out;
        } else {
            body.push_back(t);
        }
    }
    if (opener) throw parse_error("'{' is never closed", opener->offset, opener->line, opener->column);
    return body;
}

inline void apply_header(ScoreHeader& h, const Token& t) {
    const auto eq = t.text.find('=');
    const std::string key = t.text.substr(0, eq);
    const std::string value = t.text.substr(eq + 1);
    auto fail = [&](const std::string& why) { throw parse_error(why, t.offset, t.line, t.column); };
    if (key == "clef") {
        auto c = clef_from_string(value);
        if (!c) fail("unknown clef '" + value + "'");
        h.clef = *c;
    } else if (key == "time") {
        const auto slash = value.find('/');
        int n = 0, d = 0;
        if (slash == std::string::npos) fail("time signature must look like n/d");
        auto r1 = std::from_chars(value.data(), value.data() + slash, n);
        auto r2 = std::from_chars(value.data() + slash + 1, value.data() + value.size(), d);
        if (r1.ec != std::errc{} || r1.ptr != value.data() + slash || r2.ec != std::errc{} ||
            r2.ptr != value.data() + value.size() || n < 1 || !valid_exponent(d)) {
            fail("bad time signature '" + value + "'");
        }
        h.time = {n, d};
    } else if (key == "ref") {
        if (value.size() != 1 || value[0] < 'a' || value[0] > 'g') fail("ref must be a letter a..g");
        h.reference = value[0];
    } else if (key == "key") {
        h.key = value;
    } else {
        fail("unknown header field '" + key + "'");
    }
}

}  // namespace detail

/// Parses the score DSL.
///
///     clef=bass time=2/2      # header words come first
///     | [b8 f8 e8 b8] [d8 -g8 e8 b8]
///     | -c16 [-g8 e8] b16 f16 |
///
/// Measures are separated by `|` (empty measures are ignored). Brackets and
/// parentheses may span measures; `{ ... }x<N>` repeats its contents.
[[nodiscard]] inline Score parse_score(std::string_view text, ParseOptions opts = {}) {
    using detail::TokKind;
    auto raw = detail::Lexer(text).run();
    std::size_t at = 0;
    auto tokens = detail::expand_repeats(raw, at, nullptr);

    Score s;
    Measure current;
    std::vector<std::size_t> open_bracket, open_paren, open_brace;
    auto stack_for = [&](GroupKind k) -> std::vector<std::size_t>& {
        return k == GroupKind::bracket ? open_bracket : k == GroupKind::paren ? open_paren : open_brace;
    };
    auto problem = [&](const std::string& msg, const detail::Token& t) {
        if (!opts.lax) throw parse_error(msg, t.offset, t.line, t.column);
        s.warnings.push_back("line " + std::to_string(t.line) + ", column " + std::to_string(t.column) + ": " + msg);
    };
    auto flush = [&] {
        if (!current.events.empty()) s.measures.push_back(std::move(current));
        current = Measure{};
    };

    for (const auto& t : tokens) {
        switch (t.kind) {
            case TokKind::header: detail::apply_header(s.header, t); break;
            case TokKind::bar: flush(); break;
            case TokKind::open:
                s.groups.push_back({t.group, t.line, t.column, false});
                stack_for(t.group).push_back(s.groups.size() - 1);
                break;
            case TokKind::close: {
                auto& st = stack_for(t.group);
                if (st.empty()) {
                    problem(std::string("unmatched '") + (t.group == GroupKind::paren ? ")" : "]") + "'", t);
                } else {
                    s.groups[st.back()].closed = true;
                    st.pop_back();
                }
                break;
            }
            case TokKind::note: {
                auto ev = *parse_note_token(t.text);
                ev.line = t.line;
                ev.column = t.column;
                for (auto* st : {&open_bracket, &open_paren, &open_brace}) ev.groups.insert(ev.groups.end(), st->begin(), st->end());
                std::sort(ev.groups.begin(), ev.groups.end());
                if (current.events.empty()) current.line = t.line;
                current.events.push_back(std::move(ev));
                break;
            }
            case TokKind::repeat_open:
            case TokKind::repeat_close: break;
        }
    }
    flush();

    for (const auto& g : s.groups) {
        if (g.closed) continue;
        detail::Token where;
        where.line = g.line;
        where.column = g.column;
        problem(std::string("unclosed '") + (g.kind == GroupKind::paren ? "(" : g.kind == GroupKind::bracket ? "[" : "{") + "'", where);
    }
    if (s.measures.empty()) throw parse_error("score has no notes", 0, 1, 1);

    const int want = s.header.time.measure_units();
    for (std::size_t i = 0; i < s.measures.size(); ++i) {
        const int got = s.measures[i].duration();
        if (got == want) continue;
        std::string msg = "measure " + std::to_string(i + 1) + " lasts " + std::to_string(got) +
                          " sixty-fourths; time " + s.header.time.to_string() + " needs " + std::to_string(want);
        if (!opts.lax) throw error(errc::validation, "line " + std::to_string(s.measures[i].line) + ": " + msg);
        s.warnings.push_back("line " + std::to_string(s.measures[i].line) + ": " + msg);
    }
    return s;
}

}  // namespace brauerkit::score
