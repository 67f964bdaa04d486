#ifndef TOPZETA_PARSE_HPP
#define TOPZETA_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "topzeta/newton_polygon.hpp"

namespace topzeta {

/// Thrown on malformed polynomial input; position is the byte offset into
/// the text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Parses a polynomial in x and y: terms joined by + or -, each an optional
/// rational coefficient (integer or p/q) followed by factors x, y, x^e, y^e
/// with optional '*' separators; whitespace is insignificant. Like terms are
/// merged and zero terms dropped. Throws ParseError on syntax errors, on a
/// surviving constant term ("f(0) != 0 required"), and when everything
/// cancels ("f is zero").
std::vector<SupportPoint> parse_polynomial(std::string_view text);

/// Canonical rendering: terms sorted by exponent; parse_polynomial is a left
/// inverse of this on valid support sets.
std::string render_polynomial(const std::vector<SupportPoint>& support);

} // namespace topzeta

#endif
