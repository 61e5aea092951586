#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ribbon/arrow_presentation.hpp"

namespace ribbon {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based; 0 when the error is not tied to a line (e.g. a label count).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// .arp: one circle per non-empty line, tokens `label+` / `label-`, `()` for an
// empty circle, `#` starts a comment that runs to the end of the line.
ArrowPresentation parse_arp(std::string_view text);
ArrowPresentation read_arp(std::istream& in);
/// Reads a file, or standard input when `path` is "-".
ArrowPresentation load_arp(const std::string& path);

std::string format_arp(const ArrowPresentation& g);
/// Single-line form, e.g. "(a+ b+ a+ b+)(c-)(c+)".
std::string to_inline(const ArrowPresentation& g);

}  // namespace ribbon
