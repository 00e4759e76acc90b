#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "brauerkit/configuration.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/invariants.hpp"
#include "json.hpp"

namespace brauerkit {

namespace detail {

inline std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    for (std::string tok; is >> tok;) out.push_back(tok);
    return out;
}

inline std::size_t parse_count(const std::string& tok, std::size_t line, std::string_view what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw parse_error("expected a non-negative integer for " + std::string(what) + ", got '" + tok + "'", 0,
                          line, 1);
    }
    return value;
}

}  // namespace detail

/// Reads the line-oriented configuration format:
///
///     # comment
///     O E X B D K
///     O L F W D label: 2 1 3 4 5
///
/// One polygon per line, whitespace-separated vertex labels, an optional
/// `label:` suffix with a 1-based permutation of word positions.
[[nodiscard]] inline BrauerConfiguration parse_configuration(std::string_view text) {
    std::vector<BrauerConfiguration::word_type> words;
    std::vector<std::optional<std::vector<std::size_t>>> labels;
    bool any_label = false;
    std::size_t line_no = 0;
    std::istringstream is{std::string(text)};
    for (std::string raw; std::getline(is, raw);) {
        ++line_no;
        std::string_view line = detail::strip_comment(raw);

        std::optional<std::vector<std::size_t>> label;
        if (auto colon = line.find("label:"); colon != std::string_view::npos) {
            std::vector<std::size_t> perm;
            for (const auto& tok : detail::split_ws(line.substr(colon + 6))) {
                perm.push_back(detail::parse_count(tok, line_no, "label position"));
            }
            label = std::move(perm);
            line = line.substr(0, colon);
        }
        auto toks = detail::split_ws(line);
        if (toks.empty()) {
            if (label) throw parse_error("label without polygon", 0, line_no, 1);
            continue;
        }
        if (toks.size() < 2) throw parse_error("polygon needs at least 2 vertices", 0, line_no, 1);
        BrauerConfiguration::word_type word;
        for (auto& t : toks) word.emplace_back(std::move(t));
        any_label = any_label || label.has_value();
        words.push_back(std::move(word));
        labels.push_back(std::move(label));
    }
    if (words.empty()) throw parse_error("configuration has no polygons", 0, line_no, 1);
    if (!any_label) labels.clear();
    return BrauerConfiguration(std::move(words), std::move(labels));
}

[[nodiscard]] inline std::string format_configuration(const BrauerConfiguration& config) {
    std::ostringstream os;
    for (const auto& p : config.polygons()) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p.word()[i].label();
        if (p.label()) {
            os << " label:";
            for (auto x : *p.label()) os << ' ' << x;
        }
        os << '\n';
    }
    return os.str();
}

/// Reads a valency profile:
///
///     polygons 13
///     loops 32
///     valency 1 12     # twelve vertices of valency one
///
[[nodiscard]] inline ValencyProfile parse_valency_profile(std::string_view text) {
    ValencyProfile p;
    bool have_polygons = false;
    bool have_loops = false;
    std::size_t line_no = 0;
    std::istringstream is{std::string(text)};
    for (std::string raw; std::getline(is, raw);) {
        ++line_no;
        auto toks = detail::split_ws(detail::strip_comment(raw));
        if (toks.empty()) continue;
        const auto& key = toks[0];
        if (key == "polygons" && toks.size() == 2) {
            p.polygon_count = detail::parse_count(toks[1], line_no, "polygons");
            have_polygons = true;
        } else if (key == "loops" && toks.size() == 2) {
            p.loops = detail::parse_count(toks[1], line_no, "loops");
            have_loops = true;
        } else if (key == "valency" && toks.size() == 3) {
            auto val = detail::parse_count(toks[1], line_no, "valency");
            auto count = detail::parse_count(toks[2], line_no, "vertex count");
            if (val == 0) throw parse_error("valency must be positive", 0, line_no, 1);
            if (p.valency_histogram.contains(val)) {
                throw parse_error("valency " + toks[1] + " listed twice", 0, line_no, 1);
            }
            if (count > 0) p.valency_histogram[val] = count;
        } else {
            throw parse_error("unrecognized profile line '" + raw + "'", 0, line_no, 1);
        }
    }
    if (!have_polygons) throw parse_error("profile lacks a 'polygons' line", 0, line_no, 1);
    if (!have_loops) throw parse_error("profile lacks a 'loops' line", 0, line_no, 1);
    return p;
}

/// Canonical JSON object with key order dimLambda, dimCenter, loops,
/// polygons, vertices, valencyHistogram. A disconnected configuration has
/// `"dimCenter": null` and an extra trailing `"connected": false`.
[[nodiscard]] inline nlohmann::ordered_json to_json(const AlgebraInvariants& inv) {
    nlohmann::ordered_json j;
    j["dimLambda"] = inv.dim_lambda;
    if (inv.dim_center) {
        j["dimCenter"] = *inv.dim_center;
    } else {
        j["dimCenter"] = nullptr;
    }
    j["loops"] = inv.loops;
    j["polygons"] = inv.polygon_count;
    j["vertices"] = inv.vertex_count;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [val, count] : inv.valency_histogram) hist[std::to_string(val)] = count;
    j["valencyHistogram"] = std::move(hist);
    if (!inv.dim_center) {
        j["connected"] = false;
        j["components"] = inv.components;
        j["centerFormula"] = inv.center_formula;
    }
    return j;
}

}  // namespace brauerkit
