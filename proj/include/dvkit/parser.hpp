#ifndef DVKIT_PARSER_HPP
#define DVKIT_PARSER_HPP

#include "dvkit/ring.hpp"

#include <stdexcept>
#include <string>

namespace dvkit {

struct ParseError : std::runtime_error {
    ParseError(const std::string &msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line, col;
};

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      -- '/' only in rational-function mode
//   factor := base ('^' natural)?
//   base   := rational | identifier | '(' expr ')' | '-' base
//   rational := integer ('/' positive-integer)?
// Identifiers must be declared variables or parameters. Whitespace is
// insignificant. In polynomial mode '/' is only the rational-literal form.

Polynomial parse_polynomial(const std::string &text, const ContextPtr &ctx);
RationalFunction parse_rational_function(const std::string &text, const ContextPtr &ctx);

/// Parses a variable-free expression ('/' allowed) into a base-field element.
FieldElement parse_field_element(const std::string &text, const ContextPtr &ctx);

} // namespace dvkit

#endif
