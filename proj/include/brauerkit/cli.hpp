#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "brauerkit/canon_graph.hpp"
#include "brauerkit/cipher/bridges.hpp"
#include "brauerkit/cipher/classical.hpp"
#include "brauerkit/cipher/coincidence.hpp"
#include "brauerkit/cipher/friedman.hpp"
#include "brauerkit/config_io.hpp"
#include "brauerkit/error.hpp"
#include "brauerkit/invariants.hpp"
#include "brauerkit/score/encode.hpp"
#include "brauerkit/score/parser.hpp"

namespace brauerkit::cli {

using json = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "1";

namespace detail {

namespace fs = std::filesystem;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::io, "cannot write '" + path + "'");
    out << content;
    if (!out) throw error(errc::io, "failed writing '" + path + "'");
}

inline std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

inline double rounded(double x) { return std::round(x * 1e6) / 1e6; }

inline json header_json() {
    json j;
    j["schema"] = std::string(schema_version);
    return j;
}

inline void merge(json& into, const json& from) {
    for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

/// Text from --text, --in or stdin, with surrounding whitespace removed.
/// With `strip`, everything outside A-Z/a-z is dropped and letters are
/// upper-cased; otherwise stray characters reach the cipher and fail there.
inline std::string gather_text(const std::string& text, const std::string& in_path, bool strip) {
    std::string raw;
    if (!text.empty()) {
        raw = text;
    } else if (!in_path.empty()) {
        raw = read_file(in_path);
    } else {
        raw.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    raw = trim(raw);
    if (strip) return cipher::Alphabet::english().normalize(raw);
    return raw;
}

// "3412", "3,4,1,2" or several permutations joined by '/'.
inline std::vector<cipher::BlockPermutation> parse_permutations(std::string_view key) {
    std::vector<cipher::BlockPermutation> out;
    std::size_t at = 0;
    while (at <= key.size()) {
        auto slash = key.find('/', at);
        if (slash == std::string_view::npos) slash = key.size();
        auto part = key.substr(at, slash - at);
        std::vector<std::size_t> oneline;
        if (part.find(',') != std::string_view::npos) {
            std::size_t p = 0;
            while (p <= part.size()) {
                auto comma = part.find(',', p);
                if (comma == std::string_view::npos) comma = part.size();
                auto tok = part.substr(p, comma - p);
                std::size_t v = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                    throw error(errc::validation, "bad permutation entry '" + std::string(tok) + "'");
                }
                oneline.push_back(v);
                p = comma + 1;
            }
        } else {
            for (char c : part) {
                if (c < '1' || c > '9') throw error(errc::validation, "bad permutation '" + std::string(part) + "'");
                oneline.push_back(static_cast<std::size_t>(c - '0'));
            }
        }
        out.emplace_back(std::move(oneline));
        at = slash + 1;
    }
    return out;
}

inline std::string run_transposition(const std::string& text, const std::string& key, bool decrypt) {
    auto perms = parse_permutations(key);
    if (perms.size() == 1) {
        const std::size_t s = perms.front().size();
        if (text.size() % s != 0) {
            throw error(errc::validation, "text length " + std::to_string(text.size()) +
                                              " is not a multiple of the block size " + std::to_string(s));
        }
        perms.assign(text.size() / s, perms.front());
    }
    auto blocks = cipher::split_blocks(text, cipher::block_sizes(perms));
    return decrypt ? cipher::transposition_decrypt(blocks, perms) : cipher::transposition_encrypt(blocks, perms);
}

inline json invariants_report(std::string_view kind, const AlgebraInvariants& inv) {
    auto j = header_json();
    j["kind"] = std::string(kind);
    merge(j, to_json(inv));
    return j;
}

inline json ciphertext_report(const std::string& cipher_text, std::size_t m) {
    auto config = cipher::vigenere_to_config(cipher_text, m);
    auto j = invariants_report("ciphertext", invariants(config));
    j["keylen"] = m;
    auto ioc = cipher::index_of_coincidence(std::string_view(cipher_text));
    auto bioc = cipher::brauer_ioc(cipher_text, m);
    j["ioc"] = rounded(to_double(ioc));
    j["iocExact"] = to_fraction_string(ioc);
    j["brauerIoc"] = rounded(to_double(bioc));
    j["brauerIocExact"] = to_fraction_string(bioc);
    return j;
}

inline json score_report(const std::string& text, bool lax) {
    auto s = score::parse_score(text, {.lax = lax});
    auto j = invariants_report("score", invariants(score::score_to_config(s)));
    j["measures"] = s.measures.size();
    j["warnings"] = s.warnings;
    return j;
}

/// Report for a fixture file chosen by extension: .cfg, .bsc, .profile.
inline std::optional<json> file_report(const std::string& path, bool lax) {
    const auto ext = fs::path(path).extension().string();
    if (ext == ".cfg") return invariants_report("config", invariants(parse_configuration(read_file(path))));
    if (ext == ".bsc") return score_report(read_file(path), lax);
    if (ext == ".profile") return invariants_report("profile", invariants(parse_valency_profile(read_file(path))));
    return std::nullopt;
}

inline std::string render(const json& j) { return j.dump(2) + "\n"; }

// Each <file>.golden.json holds the report for <file> in the same directory.
// Scores are checked in lax mode so that fixtures with irregular measures
// still have a golden report.
inline int verify_goldens(const std::string& dir, std::ostream& out) {
    if (!fs::is_directory(dir)) throw error(errc::io, "'" + dir + "' is not a directory");
    std::vector<fs::path> goldens;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.size() > 12 && name.ends_with(".golden.json")) goldens.push_back(entry.path());
    }
    std::sort(goldens.begin(), goldens.end());
    if (goldens.empty()) throw error(errc::not_found, "no *.golden.json files in '" + dir + "'");

    auto report = header_json();
    auto results = json::array();
    std::size_t failures = 0;
    for (const auto& g : goldens) {
        const auto name = g.filename().string();
        const auto stem = name.substr(0, name.size() - std::string_view(".golden.json").size());
        json r;
        r["golden"] = name;
        const auto source = g.parent_path() / stem;
        if (!fs::exists(source)) {
            r["status"] = "missing-source";
            ++failures;
        } else if (auto fresh = file_report(source.string(), true)) {
            r["source"] = stem;
            const bool same = render(*fresh) == read_file(g.string());
            r["status"] = same ? "ok" : "mismatch";
            failures += same ? 0 : 1;
        } else {
            r["status"] = "unknown-kind";
            ++failures;
        }
        results.push_back(std::move(r));
    }
    report["checked"] = goldens.size();
    report["failures"] = failures;
    report["results"] = std::move(results);
    out << render(report);
    if (failures) throw error(errc::validation, std::to_string(failures) + " golden report(s) did not verify");
    return 0;
}

inline bool use_color(const std::ostream& err) {
    const char* env = std::getenv("BRAUER_KIT_COLOR");
    const std::string mode = env ? env : "auto";
    if (mode == "never") return false;
    if (mode != "auto") {
        throw error(errc::validation, "BRAUER_KIT_COLOR must be 'never' or 'auto', got '" + mode + "'");
    }
    return &err == &std::cerr && ::isatty(STDERR_FILENO);
}

inline void report_error(std::ostream& err, bool color, std::string_view category, std::string_view what) {
    if (color) err << "\x1b[1;31m";
    err << "brauerkit: error[" << category << "]:";
    if (color) err << "\x1b[0m";
    err << ' ' << what << '\n';
}

}  // namespace detail

/// Runs one command line (without the program name). Exit status: 0 on
/// success, 2 for usage, input and precondition errors, 1 for internal ones.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool color = false;
    try {
        color = detail::use_color(err);
    } catch (const error& e) {
        detail::report_error(err, false, to_string(e.code()), e.what());
        return 2;
    }

    CLI::App app{"Brauer configuration toolkit: classical ciphers, scores and canon diagrams", "brauerkit"};
    app.require_subcommand(1);

    std::string system, key, text, in_path;
    bool strip = false;
    auto add_text_options = [&](CLI::App* sub) {
        sub->add_option("--text", text, "Input text (default: --in file or stdin)");
        sub->add_option("--in", in_path, "Read the input text from a file");
        sub->add_flag("--strip", strip, "Drop characters outside A-Z and upper-case the rest");
    };

    auto* encrypt = app.add_subcommand("encrypt", "Encrypt text");
    auto* decrypt = app.add_subcommand("decrypt", "Decrypt text");
    for (auto* sub : {encrypt, decrypt}) {
        sub->add_option("--system", system, "vigenere or transposition")
            ->required()
            ->check(CLI::IsMember({"vigenere", "transposition"}));
        sub->add_option("--key", key, "Vigenere key word, or a block permutation such as 3412 or 3,4,1,2")
            ->required();
        add_text_options(sub);
    }

    std::size_t max_keylen = 10, top = 5;
    auto* attack = app.add_subcommand("attack", "Friedman attack on a Vigenere ciphertext");
    attack->add_option("--max-keylen", max_keylen, "Largest key length tried")->check(CLI::Range(1, 1000));
    attack->add_option("--top", top, "Key candidates reported")->check(CLI::Range(1, 26));
    add_text_options(attack);

    std::string config_path, score_path, profile_path, ciphertext, input_path, verify_dir;
    std::size_t keylen = 0;
    bool lax = false;
    auto* analyze = app.add_subcommand("analyze", "Brauer invariants of a configuration, score, profile or ciphertext");
    analyze->add_option("--config", config_path, "Configuration file, one polygon per line");
    analyze->add_option("--score", score_path, "Score file");
    analyze->add_option("--profile", profile_path, "Valency profile file");
    analyze->add_option("--ciphertext", ciphertext, "Vigenere ciphertext (needs --keylen)");
    analyze->add_option("--keylen", keylen, "Key length used to split the ciphertext")->check(CLI::Range(1, 100000));
    analyze->add_option("--input", input_path, "File dispatched by extension: .cfg .bsc .profile .txt");
    analyze->add_option("--verify", verify_dir, "Re-check every *.golden.json report in a directory");
    analyze->add_flag("--strip", strip, "Drop characters outside A-Z from the ciphertext");
    analyze->add_flag("--lax", lax, "Accept irregular measures and unbalanced groups in scores");

    std::string check_path;
    auto* score_check = app.add_subcommand("score-check", "Validate a score and its measure lengths");
    score_check->add_option("file", check_path, "Score file")->required();
    score_check->add_flag("--lax", lax, "Report problems as warnings");

    std::string graph_path, clef_name, ref, orientation_name = "standard", edges_path, svg_path;
    bool connect_equal = false;
    auto* graph = app.add_subcommand("graph", "Point diagram of a score's note classes");
    graph->add_option("file", graph_path, "Score file")->required();
    graph->add_option("--clef", clef_name, "treble, bass or alto (default: the score header)")
        ->check(CLI::IsMember({"treble", "bass", "alto"}));
    graph->add_option("--ref", ref, "Letter at height 0 (default: the clef's)");
    graph->add_option("--orientation", orientation_name, "standard or reversed")
        ->check(CLI::IsMember({"standard", "reversed"}));
    graph->add_option("--edges", edges_path, "Extra edges, one 'i j' pair per line");
    graph->add_flag("--connect-equal", connect_equal, "Also join consecutive points of equal height");
    graph->add_option("--svg", svg_path, "Write the diagram as SVG");
    graph->add_flag("--lax", lax, "Accept irregular measures and unbalanced groups");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        detail::report_error(err, color, "usage", e.what());
        return 2;
    }

    try {
        if (encrypt->parsed() || decrypt->parsed()) {
            const bool dec = decrypt->parsed();
            auto input = detail::gather_text(text, in_path, strip);
            if (system == "vigenere") {
                auto k = cipher::VigenereKey::from_text(key);
                out << (dec ? cipher::vigenere_decrypt(input, k) : cipher::vigenere_encrypt(input, k)) << '\n';
            } else {
                out << detail::run_transposition(input, key, dec) << '\n';
            }
            return 0;
        }

        if (attack->parsed()) {
            auto c = detail::gather_text(text, in_path, strip);
            auto ranked = cipher::friedman_keylength(c, max_keylen);
            auto j = detail::header_json();
            auto lengths = json::array();
            for (const auto& cand : ranked) {
                json row;
                row["m"] = cand.m;
                auto iocs = json::array();
                for (const auto& r : cand.per_list_ioc) iocs.push_back(detail::rounded(to_double(r)));
                row["perListIoC"] = std::move(iocs);
                row["score"] = detail::rounded(cand.score);
                row["flagged"] = cand.flagged;
                row["flaggedDivisors"] = cand.flagged_divisors;
                lengths.push_back(std::move(row));
            }
            j["keylengthCandidates"] = std::move(lengths);
            const std::size_t m = ranked.front().m;
            auto recovery = cipher::friedman_recover_key(c, m);
            auto keys = json::array();
            for (std::size_t i = 0; i < std::min(top, recovery.candidates.size()); ++i) {
                json row;
                row["key"] = recovery.candidates[i].key.to_text();
                row["chi2"] = detail::rounded(recovery.candidates[i].chi2);
                keys.push_back(std::move(row));
            }
            j["keyCandidates"] = std::move(keys);
            auto inv = invariants(cipher::vigenere_to_config(c, m));
            json brauer;
            brauer["m"] = m;
            brauer["dimLambda"] = inv.dim_lambda;
            if (inv.dim_center) {
                brauer["dimCenter"] = *inv.dim_center;
            } else {
                brauer["dimCenter"] = nullptr;
            }
            brauer["loops"] = inv.loops;
            j["brauer"] = std::move(brauer);
            j["ioc"] = detail::rounded(to_double(cipher::index_of_coincidence(std::string_view(c))));
            j["brauerIoc"] = detail::rounded(to_double(cipher::brauer_ioc(c, m)));
            out << detail::render(j);
            return 0;
        }

        if (analyze->parsed()) {
            const int chosen = !config_path.empty() + !score_path.empty() + !profile_path.empty() +
                               !ciphertext.empty() + !input_path.empty() + !verify_dir.empty();
            if (chosen != 1) {
                throw error(errc::validation,
                            "analyze needs exactly one of --config, --score, --profile, --ciphertext, --input, --verify");
            }
            if (!verify_dir.empty()) return detail::verify_goldens(verify_dir, out);
            json j;
            if (!config_path.empty()) {
                j = detail::invariants_report("config", invariants(parse_configuration(detail::read_file(config_path))));
            } else if (!score_path.empty()) {
                j = detail::score_report(detail::read_file(score_path), lax);
            } else if (!profile_path.empty()) {
                j = detail::invariants_report("profile",
                                              invariants(parse_valency_profile(detail::read_file(profile_path))));
            } else {
                std::string c = ciphertext;
                if (!input_path.empty()) {
                    if (auto r = detail::file_report(input_path, lax)) {
                        out << detail::render(*r);
                        return 0;
                    }
                    if (std::filesystem::path(input_path).extension() != ".txt") {
                        throw error(errc::validation, "cannot tell the kind of '" + input_path +
                                                          "' from its extension (.cfg .bsc .profile .txt)");
                    }
                    c = detail::read_file(input_path);
                }
                c = detail::trim(c);
                if (strip) c = cipher::Alphabet::english().normalize(c);
                if (keylen == 0) throw error(errc::validation, "a ciphertext needs --keylen");
                (void)cipher::Alphabet::english().encode(c);
                j = detail::ciphertext_report(c, keylen);
            }
            out << detail::render(j);
            return 0;
        }

        if (score_check->parsed()) {
            auto s = score::parse_score(detail::read_file(check_path), {.lax = lax});
            auto j = detail::header_json();
            j["valid"] = s.warnings.empty();
            j["header"] = score::format_header(s.header);
            j["measures"] = s.measures.size();
            j["events"] = s.event_count();
            j["groups"] = s.groups.size();
            j["warnings"] = s.warnings;
            out << detail::render(j);
            return 0;
        }

        if (graph->parsed()) {
            auto s = score::parse_score(detail::read_file(graph_path), {.lax = lax});
            if (!clef_name.empty()) s.header.clef = *score::clef_from_string(clef_name);
            if (!ref.empty()) {
                if (ref.size() != 1 || ref[0] < 'a' || ref[0] > 'g') {
                    throw error(errc::validation, "--ref must be a letter a..g");
                }
                s.header.reference = ref[0];
            }
            canon::PolylineOptions opts;
            opts.connect_equal_y = connect_equal;
            if (!edges_path.empty()) opts.extra_edges = canon::parse_edges(detail::read_file(edges_path));
            auto d = canon::build_polyline(
                canon::assign_points(canon::classify_notes(s), s.header,
                                     *canon::orientation_from_string(orientation_name)),
                opts);
            auto j = detail::header_json();
            j["clef"] = std::string(score::to_string(s.header.clef));
            j["reference"] = std::string(1, s.header.reference_letter());
            detail::merge(j, canon::emit_json(d));
            if (!svg_path.empty()) detail::write_file(svg_path, canon::emit_svg(d));
            out << detail::render(j);
            return 0;
        }
    } catch (const error& e) {
        detail::report_error(err, color, to_string(e.code()), e.what());
        return e.code() == errc::internal ? 1 : 2;
    } catch (const std::exception& e) {
        detail::report_error(err, color, "internal", e.what());
        return 1;
    }
    return 0;
}

}  // namespace brauerkit::cli
