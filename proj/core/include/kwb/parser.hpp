#pragma once

#include <stdexcept>
#include <string>

#include "kwb/presentation.hpp"

namespace kwb {

/// Parse failure with a position; what() carries "line L, col C: ...".
struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(int line, int col, const std::string& msg);
};

/// Line-based presentation format:
///
///   # comment
///   name poly2          (optional; overrides the fallback name)
///   field Q             (required, exactly once)
///   generator x 0 1     (label, homological degree, Adams degree)
///   relation x*y - y*x
///   differential y x^2
///
/// Expressions are sums of terms c*w with rational c ("3", "-1/2") and
/// words of generators joined by '*', powers written with '^'.
/// Structural problems found by Presentation::validate are also raised
/// as ParseError against the offending line.
Presentation parse_presentation(const std::string& text, const std::string& fallback_name);

/// Reads a file; the fallback name is the file stem. Errors mention the path.
Presentation load_presentation(const std::string& path);

}  // namespace kwb
