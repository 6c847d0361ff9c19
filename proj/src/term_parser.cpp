#include <charconv>
#include <limits>
#include <optional>
#include <string>

#include "dcount/cli.hpp"
#include "dcount/core.hpp"

namespace dcount::cli {

namespace {

std::string describe(const std::set<std::string>& expected) {
  std::string s;
  for (const auto& e : expected) {
    if (!s.empty()) s += ", ";
    s += e;
  }
  return s;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9';
  }

  /// Reads an unsigned integer; the caller has checked at_digit().
  std::uint64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail({"INT < 2^64"});
    }
    return value;
  }

  std::size_t pos() {
    skip_space();
    return pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    skip_space();
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), std::move(found));
  }

  [[noreturn]] void fail_at(std::size_t offset, std::set<std::string> expected, std::string found) {
    throw ParseError(offset, std::move(expected), std::move(found));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

TermFunction parse_term(Cursor& in) {
  std::uint64_t coeff = 1;
  const bool has_coeff = in.at_digit();
  if (has_coeff) {
    const std::size_t at = in.pos();
    coeff = in.integer();
    if (coeff == 0) in.fail_at(at, {"INT >= 1"}, "0");
    if (!in.accept('*')) in.fail({"'*'"});
  }
  if (!in.accept('k')) in.fail(has_coeff ? std::set<std::string>{"'k'"} : std::set<std::string>{"INT", "'k'"});
  if (!in.accept('^')) return TermFunction::affine(coeff);
  if (!in.at_digit()) in.fail({"INT"});
  const std::size_t at = in.pos();
  const std::uint64_t exponent = in.integer();
  if (exponent == 0) in.fail_at(at, {"INT >= 1"}, "0");
  if (exponent > 64) in.fail_at(at, {"INT <= 64"}, std::to_string(exponent));
  return TermFunction::power(coeff, static_cast<std::uint32_t>(exponent));
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::set<std::string> expected, std::string found)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": expected " + describe(expected) +
                         ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

std::vector<TermFunction> parse_terms(std::string_view input) {
  Cursor in(input);
  std::vector<TermFunction> terms;
  terms.push_back(parse_term(in));
  while (!in.at_end()) {
    if (!in.accept(',')) in.fail({"','", "'^'", "end of input"});
    terms.push_back(parse_term(in));
  }
  return terms;
}

std::vector<std::uint64_t> parse_coeffs(std::string_view input) {
  Cursor in(input);
  std::vector<std::uint64_t> out;
  do {
    if (!in.at_digit()) in.fail({"INT"});
    std::size_t at = in.pos();
    const std::uint64_t lo = in.integer();
    if (lo == 0) in.fail_at(at, {"INT >= 1"}, "0");
    std::uint64_t hi = lo;
    if (in.accept("..")) {
      if (!in.at_digit()) in.fail({"INT"});
      at = in.pos();
      hi = in.integer();
      if (hi < lo) in.fail_at(at, {"INT >= " + std::to_string(lo)}, std::to_string(hi));
      if (hi - lo > 1'000'000) in.fail_at(at, {"range of at most 10^6 items"}, std::to_string(hi));
    }
    for (std::uint64_t a = lo; a <= hi; ++a) out.push_back(a);
  } while (in.accept(','));
  if (!in.at_end()) in.fail({"','", "'..'", "end of input"});
  return out;
}

}  // namespace dcount::cli
