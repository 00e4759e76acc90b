#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "brauerkit/error.hpp"
#include "brauerkit/score/parser.hpp"

namespace brauerkit::canon {

enum class Orientation { standard, reversed };

[[nodiscard]] inline std::string_view to_string(Orientation o) noexcept {
    return o == Orientation::standard ? "standard" : "reversed";
}

[[nodiscard]] inline std::optional<Orientation> orientation_from_string(std::string_view s) noexcept {
    if (s == "standard") return Orientation::standard;
    if (s == "reversed") return Orientation::reversed;
    return std::nullopt;
}

struct ClassPoint {
    score::NoteEvent note;  ///< first occurrence of the class
    std::string label;
    int x = 0;
    std::optional<int> y;  ///< empty for rests
};

using Edge = std::pair<std::size_t, std::size_t>;

struct PointDiagram {
    std::vector<ClassPoint> points;
    std::vector<Edge> edges;
    Orientation orientation = Orientation::standard;

    [[nodiscard]] std::size_t pitched_count() const noexcept {
        return static_cast<std::size_t>(
            std::count_if(points.begin(), points.end(), [](const ClassPoint& p) { return p.y.has_value(); }));
    }
};

/// Distinct note classes in order of first appearance, rests included.
/// Throws errc::precondition for a score without events.
[[nodiscard]] inline std::vector<score::NoteEvent> classify_notes(const score::Score& s) {
    std::vector<score::NoteEvent> out;
    for (const auto& m : s.measures) {
        for (const auto& ev : m.events) {
            auto same = [&](const score::NoteEvent& o) { return o.same_class(ev); };
            if (std::none_of(out.begin(), out.end(), same)) out.push_back(ev);
        }
    }
    if (out.empty()) throw error(errc::precondition, "score has no notes to classify");
    return out;
}

/// Lowest offset a clef assigns; offsets run lo..lo+6 above the reference.
[[nodiscard]] constexpr int window_low(score::Clef c) noexcept {
    switch (c) {
        case score::Clef::treble: return -1;
        case score::Clef::bass: return -2;
        case score::Clef::alto: return -3;
    }
    return -1;
}

/// Vertical offset of `letter` from `reference`, folded into the clef window.
[[nodiscard]] constexpr int letter_offset(char letter, char reference, score::Clef clef) noexcept {
    const int lo = window_low(clef);
    int r = (letter - reference - lo) % 7;
    if (r < 0) r += 7;
    return lo + r;
}

[[nodiscard]] inline PointDiagram assign_points(const std::vector<score::NoteEvent>& classes, score::Clef clef,
                                                char reference, Orientation orientation) {
    if (reference < 'a' || reference > 'g') throw error(errc::precondition, "reference must be a letter a..g");
    PointDiagram d;
    d.orientation = orientation;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        ClassPoint p;
        p.note = classes[i];
        p.label = classes[i].label();
        p.x = static_cast<int>(i);
        if (!classes[i].rest) {
            const int y = letter_offset(classes[i].letter, reference, clef);
            p.y = orientation == Orientation::standard ? y : -y;
        }
        d.points.push_back(std::move(p));
    }
    return d;
}

[[nodiscard]] inline PointDiagram assign_points(const std::vector<score::NoteEvent>& classes,
                                                const score::ScoreHeader& header, Orientation orientation) {
    return assign_points(classes, header.clef, header.reference_letter(), orientation);
}

[[nodiscard]] inline PointDiagram reverse(PointDiagram d) {
    d.orientation = d.orientation == Orientation::standard ? Orientation::reversed : Orientation::standard;
    for (auto& p : d.points)
        if (p.y) p.y = -*p.y;
    return d;
}

struct PolylineOptions {
    bool connect_equal_y = false;
    std::vector<Edge> extra_edges;
};

/// Joins consecutive pitched points whose heights differ, skipping rests.
/// Extra edges are appended as given.
[[nodiscard]] inline PointDiagram build_polyline(PointDiagram d, const PolylineOptions& opts = {}) {
    d.edges.clear();
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < d.points.size(); ++i) {
        if (!d.points[i].y) continue;
        if (prev && (opts.connect_equal_y || *d.points[*prev].y != *d.points[i].y)) d.edges.emplace_back(*prev, i);
        prev = i;
    }
    for (const auto& [a, b] : opts.extra_edges) {
        if (a >= d.points.size() || b >= d.points.size()) {
            throw error(errc::validation, "extra edge " + std::to_string(a) + " " + std::to_string(b) +
                                              " references a point outside 0.." +
                                              std::to_string(d.points.size() - 1));
        }
        if (!d.points[a].y || !d.points[b].y) {
            throw error(errc::validation, "extra edge " + std::to_string(a) + " " + std::to_string(b) + " touches a rest");
        }
        d.edges.emplace_back(a, b);
    }
    return d;
}

/// Reads a sidecar edge list: one "i j" pair per line, # comments allowed.
[[nodiscard]] inline std::vector<Edge> parse_edges(std::string_view text) {
    std::vector<Edge> out;
    std::size_t line_no = 0;
    std::size_t offset = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t line_start = offset;
        offset += line.size() + 1;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto number = [&](const std::string& t) {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc{} || ptr != t.data() + t.size()) {
                throw parse_error("edge endpoint '" + t + "' is not a point index", line_start, line_no, 1);
            }
            return v;
        };
        if (tok.size() != 2) throw parse_error("edge line needs exactly two indices", line_start, line_no, 1);
        out.emplace_back(number(tok[0]), number(tok[1]));
    }
    return out;
}

[[nodiscard]] inline nlohmann::ordered_json emit_json(const PointDiagram& d) {
    nlohmann::ordered_json j;
    j["orientation"] = std::string(to_string(d.orientation));
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : d.points) {
        nlohmann::ordered_json o;
        o["label"] = p.label;
        o["x"] = p.x;
        if (p.y) {
            o["y"] = *p.y;
        } else {
            o["y"] = nullptr;
        }
        pts.push_back(std::move(o));
    }
    j["points"] = std::move(pts);
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : d.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j;
}

namespace detail {

// Chains edges into maximal runs where each edge starts at the previous end.
inline std::vector<std::vector<std::size_t>> edge_runs(const std::vector<Edge>& edges) {
    std::vector<std::vector<std::size_t>> runs;
    for (const auto& [a, b] : edges) {
        if (!runs.empty() && runs.back().back() == a) {
            runs.back().push_back(b);
        } else {
            runs.push_back({a, b});
        }
    }
    return runs;
}

}  // namespace detail

/// Stand-alone SVG with y pointing up: each unit step is `scale` pixels.
[[nodiscard]] inline std::string emit_svg(const PointDiagram& d, int scale = 40) {
    const int margin = scale;
    int ymin = 0, ymax = 0;
    for (const auto& p : d.points) {
        if (!p.y) continue;
        ymin = std::min(ymin, *p.y);
        ymax = std::max(ymax, *p.y);
    }
    const int width = std::max<int>(1, static_cast<int>(d.points.size()) - 1) * scale + 2 * margin;
    const int height = (ymax - ymin) * scale + 2 * margin;
    auto px = [&](int x) { return margin + x * scale; };
    auto py = [&](int y) { return margin + (ymax - y) * scale; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " << width << ' ' << height
       << "\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
    for (const auto& run : detail::edge_runs(d.edges)) {
        os << "    <polyline points=\"";
        for (std::size_t k = 0; k < run.size(); ++k) {
            const auto& p = d.points[run[k]];
            os << (k ? " " : "") << px(p.x) << ',' << py(*p.y);
        }
        os << "\"/>\n";
    }
    os << "  </g>\n";
    for (const auto& p : d.points) {
        if (p.y) {
            os << "  <circle cx=\"" << px(p.x) << "\" cy=\"" << py(*p.y) << "\" r=\"4\"/>\n";
            os << "  <text x=\"" << px(p.x) + 6 << "\" y=\"" << py(*p.y) - 6 << "\" font-size=\"12\">" << p.label
               << "</text>\n";
        } else {
            os << "  <line class=\"rest\" x1=\"" << px(p.x) << "\" y1=\"" << height - margin / 2 << "\" x2=\""
               << px(p.x) << "\" y2=\"" << height - margin << "\" stroke=\"gray\" stroke-width=\"2\"/>\n";
            os << "  <text x=\"" << px(p.x) + 4 << "\" y=\"" << height - 4 << "\" font-size=\"10\">" << p.label
               << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace brauerkit::canon
