#ifndef TRILINK_GAUSS_CODE_HPP
#define TRILINK_GAUSS_CODE_HPP

#include <stdexcept>
#include <string>

#include "trilink/diagram.hpp"

namespace trilink {

// Parse/serialize errors carry 1-based line/column of the offending token.
struct parse_error : std::runtime_error {
    int line = 0;
    int column = 0;
    parse_error(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
};

// Text format:
//   link <n>
//   component <i>[*]: <tok> <tok> ...
// with one component line per component, in index order. `*` marks a based
// component (base point before the first token). Each token is O<id><s> or
// U<id><s>; <id> is an alphanumeric crossing label, <s> is + or -. O marks
// the over-passage (arrow tail), U the under-passage (arrow head). Both
// occurrences of an id must carry the same sign. Blank lines and `#` comments
// are ignored. The returned diagram is validated.
gauss_diagram parse_gauss_code(const std::string& text);

// Canonical serialization: components in index order, tokens in slot order,
// single spaces, no trailing whitespace, trailing newline.
std::string serialize_gauss_code(const gauss_diagram& d);

}  // namespace trilink

#endif
