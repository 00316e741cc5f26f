#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Parse failure in catalog files or tuple text; line/column are 1-based
/// (line 0 means "not attached to a file line yet").
class CatalogError : public std::runtime_error {
public:
    CatalogError(std::string message, int line, int col)
        : std::runtime_error(format(message, line, col)),
          message_(std::move(message)),
          line_(line),
          col_(col) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int col() const { return col_; }

    CatalogError at_line(int line) const { return CatalogError(message_, line, col_); }

private:
    static std::string format(const std::string& m, int line, int col) {
        std::string s;
        if (line > 0) s += "line " + std::to_string(line) + ", ";
        s += "col " + std::to_string(col) + ": " + m;
        return s;
    }
    std::string message_;
    int line_;
    int col_;
};

}  // namespace liecoh
