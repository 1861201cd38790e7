#pragma once

// Text form of endomorphisms.
//
//   endo := run+
//   run  := "(" INT ")" "_" INT
//
// "(0)_2(2)_2(4)_1" on C_5 is the table [0, 0, 2, 2, 4]. Vertices must be
// strictly increasing, multiplicities positive, and the multiplicities must
// add up to the chain size. Blanks between tokens are ignored.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "chainendo/endo.hpp"

namespace chainendo {

namespace detail {

class RunParser {
 public:
  explicit RunParser(std::string_view text) : text_(text) {}

  std::vector<std::pair<int, int>> parse() {
    std::vector<std::pair<int, int>> runs;
    skip_blanks();
    if (at_end()) fail("expected '(' to open a run");
    while (!at_end()) {
      runs.push_back(parse_run());
      skip_blanks();
    }
    return runs;
  }

 private:
  std::pair<int, int> parse_run() {
    expect('(');
    const std::size_t vertex_pos = pos_;
    const long long vertex = parse_int();
    expect(')');
    expect('_');
    const std::size_t mult_pos = pos_;
    const long long mult = parse_int();
    if (vertex > kMaxChainSize) {
      throw Error(ErrorKind::OutOfRange, "vertex too large at position " + std::to_string(vertex_pos), vertex);
    }
    if (mult < 1 || mult > kMaxChainSize) {
      throw Error(ErrorKind::OutOfRange,
                  "multiplicity must be positive (position " + std::to_string(mult_pos) + ")", mult);
    }
    return {static_cast<int>(vertex), static_cast<int>(mult)};
  }

  long long parse_int() {
    skip_blanks();
    const std::size_t start = pos_;
    long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  void expect(char c) {
    skip_blanks();
    if (at_end() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_blanks() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
    throw Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + ", found " + found,
                static_cast<long long>(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Endo parse_endo(std::string_view text, int n) {
  detail::check_chain_size(n);
  const auto runs = detail::RunParser(text).parse();
  std::vector<int> table;
  int previous = -1;
  long long sum = 0;
  for (const auto& [vertex, mult] : runs) {
    if (vertex <= previous) {
      throw Error(ErrorKind::NonIncreasingVertices,
                  "vertex " + std::to_string(vertex) + " does not exceed " + std::to_string(previous), vertex);
    }
    if (vertex >= n) {
      throw Error(ErrorKind::OutOfRange,
                  "vertex " + std::to_string(vertex) + " outside [0, " + std::to_string(n - 1) + "]", vertex);
    }
    previous = vertex;
    sum += mult;
    if (sum <= n) table.insert(table.end(), mult, vertex);
  }
  if (sum != n) {
    throw Error(ErrorKind::BadSum, "multiplicities sum to " + std::to_string(sum) + ", expected " + std::to_string(n),
                sum);
  }
  return Endo::from_table(n, table);
}

/// Canonical run notation: zero runs dropped, runs in vertex order.
inline std::string format_runs(const Endo& alpha) {
  std::ostringstream out;
  int t = 0;
  while (t < alpha.size()) {
    int end = t;
    while (end < alpha.size() && alpha[end] == alpha[t]) ++end;
    out << '(' << alpha[t] << ")_" << (end - t);
    t = end;
  }
  return out.str();
}

inline std::string format_runs(const RunLengthForm& form) { return format_runs(endo_from_runs(form)); }

inline std::string format_table(const Endo& alpha) {
  std::ostringstream out;
  out << '[';
  for (int t = 0; t < alpha.size(); ++t) out << (t ? "," : "") << alpha[t];
  out << ']';
  return out.str();
}

}  // namespace chainendo
