#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "brauerkit/configuration.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/score/note.hpp"
#include "brauerkit/score/parser.hpp"

namespace brauerkit::score {

/// One polygon per measure; each event contributes its class label.
[[nodiscard]] inline BrauerConfiguration score_to_config(const Score& s) {
    std::vector<BrauerConfiguration::word_type> words;
    words.reserve(s.measures.size());
    for (std::size_t i = 0; i < s.measures.size(); ++i) {
        const auto& m = s.measures[i];
        if (m.events.size() < 2) {
            throw error(errc::validation, "measure " + std::to_string(i + 1) + " (line " + std::to_string(m.line) +
                                              ") has " + std::to_string(m.events.size()) +
                                              " event; a polygon needs at least 2");
        }
        BrauerConfiguration::word_type w;
        w.reserve(m.events.size());
        for (const auto& e : m.events) w.emplace_back(e.label());
        words.push_back(std::move(w));
    }
    return BrauerConfiguration(std::move(words));
}

[[nodiscard]] inline std::string format_header(const ScoreHeader& h) {
    std::string out = "clef=" + std::string(to_string(h.clef)) + " time=" + h.time.to_string();
    if (h.reference) out += std::string(" ref=") + *h.reference;
    if (!h.key.empty()) out += " key=" + h.key;
    return out;
}

/// DSL text of the Brauer message: a header line, then one measure per line.
/// Throws validation on a vertex label that is not a note or rest token.
[[nodiscard]] inline std::string config_to_message(const BrauerConfiguration& config, const ScoreHeader& header = {}) {
    std::ostringstream os;
    os << format_header(header) << '\n';
    for (const auto& p : config.polygons()) {
        os << '|';
        for (const auto& v : p.word()) {
            if (!parse_note_token(v.label())) {
                throw error(errc::validation, "vertex '" + v.label() + "' is not a note or rest");
            }
            os << ' ' << v.label();
        }
        os << " |\n";
    }
    return os.str();
}

}  // namespace brauerkit::score
