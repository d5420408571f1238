#pragma once

// Line-oriented parsing helpers shared by the text formats.

#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "bordered/error.hpp"

namespace bordered::text {

/// Splits on single spaces; empty fields are rejected by the callers.
inline std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    const auto next = line.find(' ', pos);
    const auto end = next == std::string_view::npos ? line.size() : next;
    out.push_back(line.substr(pos, end - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

/// ASCII decimal without sign or padding characters.
inline std::uint64_t parse_unsigned(std::string_view s, std::size_t lineno) {
  std::uint64_t v = 0;
  if (s.empty()) throw InvalidInput(lineno, "empty field");
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidInput(lineno, "not a decimal integer: '" + std::string(s) + "'");
  return v;
}

/// Reads lines, skipping '#' comments and tracking the physical line number.
class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}

  bool next(std::string& line) {
    while (std::getline(is_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line.front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t lineno() const { return lineno_; }

 private:
  std::istream& is_;
  std::size_t lineno_ = 0;
};

}  // namespace bordered::text
