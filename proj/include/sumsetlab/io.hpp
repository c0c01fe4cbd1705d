#pragma once
// Set parsing (CLI literal and file formats), RFC 3339 timestamps, and
// the single-line append used for run reports.

#include <cctype>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumsetlab/int_set.hpp"

namespace sumsetlab {

// comma-separated decimal integers with optional minus sign; whitespace
// around numbers and separators is ignored
inline IntSet parse_set_literal(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == n) throw std::invalid_argument("set literal: empty input");
  for (;;) {
    skip_ws();
    const std::size_t start = i;
    if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0)
      throw std::invalid_argument(
          "set literal: expected integer at position " +
          std::to_string(start));
    try {
      values.push_back(std::stoll(text.substr(start, i - start)));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument(
          "set literal: integer out of 64-bit range at position " +
          std::to_string(start));
    }
    skip_ws();
    if (i == n) break;
    if (text[i] != ',')
      throw std::invalid_argument("set literal: expected ',' at position " +
                                  std::to_string(i));
    ++i;
  }
  return make_set(std::move(values));
}

// one integer per line; '#'-prefixed comment lines and blank lines ignored
inline IntSet parse_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("set file: cannot open '" + path + "'");
  std::vector<std::int64_t> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(a, b - a + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("set file: line " + std::to_string(lineno) +
                                  ": expected one integer, got '" + tok + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("set file: line " + std::to_string(lineno) +
                                  ": trailing characters in '" + tok + "'");
    values.push_back(v);
  }
  if (values.empty())
    throw std::invalid_argument("set file: no elements in '" + path + "'");
  return make_set(std::move(values));
}

inline std::string rfc3339_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// one complete line per call, buffered and flushed as a unit so a crashed
// run leaves no partial record
inline void append_jsonl_line(const std::string& path,
                              const std::string& line) {
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw std::invalid_argument("report: cannot open '" + path +
                                "' for append");
  out << line << '\n';
  out.flush();
  if (!out)
    throw std::runtime_error("report: write to '" + path + "' failed");
}

}  // namespace sumsetlab
