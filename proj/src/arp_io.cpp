#include "ribbon/arp_io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace ribbon {

namespace {

bool is_label_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

ArrowPresentation parse_arp(std::string_view text) {
  std::vector<Circle> circles;
  std::map<Label, std::pair<int, std::size_t>> seen;  // label -> (count, first line)

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    line = trim(line.substr(0, line.find('#')));
    ++line_no;
    start = end + 1;

    if (line.empty()) continue;
    if (line == "()") {
      circles.emplace_back();
      continue;
    }

    Circle circle;
    std::istringstream tokens{std::string(line)};
    std::string tok;
    while (tokens >> tok) {
      if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) {
        throw ParseError(line_no, "bad token '" + tok + "' (expected label+ or label-)");
      }
      const std::string label = tok.substr(0, tok.size() - 1);
      for (char c : label) {
        if (!is_label_char(c)) throw ParseError(line_no, "bad label '" + label + "'");
      }
      auto& [count, first_line] = seen[label];
      if (count == 0) first_line = line_no;
      if (++count > 2) throw ParseError(line_no, "label '" + label + "' occurs more than twice");
      circle.push_back({label, tok.back() == '+' ? Sign::Plus : Sign::Minus});
    }
    circles.push_back(std::move(circle));
  }

  for (const auto& [label, entry] : seen) {
    if (entry.first != 2) {
      throw ParseError(entry.second, "label '" + label + "' occurs once; labels must occur exactly twice");
    }
  }
  return ArrowPresentation(std::move(circles));
}

ArrowPresentation read_arp(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arp(buf.str());
}

ArrowPresentation load_arp(const std::string& path) {
  if (path == "-") return read_arp(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_arp(in);
}

std::string format_arp(const ArrowPresentation& g) {
  std::string out;
  for (const Circle& c : g.circles()) {
    if (c.empty()) {
      out += "()\n";
      continue;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += c[i].label;
      out += c[i].sign == Sign::Plus ? '+' : '-';
    }
    out += '\n';
  }
  return out;
}

std::string to_inline(const ArrowPresentation& g) {
  std::string out;
  for (const Circle& c : g.circles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += c[i].label;
      out += c[i].sign == Sign::Plus ? '+' : '-';
    }
    out += ')';
  }
  return out;
}

}  // namespace ribbon
