#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace brauerkit {

/// Stable error categories. The CLI prints `error[<name>]` and maps every
/// category except `internal` to exit status 2.
enum class errc {
    not_found,
    precondition,
    parse,
    validation,
    io,
    internal,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::not_found: return "not-found";
        case errc::precondition: return "precondition";
        case errc::parse: return "parse";
        case errc::validation: return "validation";
        case errc::io: return "io";
        case errc::internal: return "internal";
    }
    return "internal";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Parse failure with a source position. `line` and `column` are 1-based;
/// `offset` is the 0-based character offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t offset, std::size_t line = 0, std::size_t column = 0)
        : error(errc::parse, decorate(what, offset, line, column)),
          offset_(offset),
          line_(line),
          column_(column) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    static std::string decorate(const std::string& what, std::size_t offset, std::size_t line,
                                std::size_t column) {
        if (line > 0) return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
        return "offset " + std::to_string(offset) + ": " + what;
    }

    std::size_t offset_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace brauerkit
