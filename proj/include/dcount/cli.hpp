#ifndef DCOUNT_CLI_HPP
#define DCOUNT_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dcount/term_function.hpp"

namespace dcount::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_guard = 3;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::set<std::string> expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

/// Comma-separated terms, each `[INT "*"] "k" ["^" INT]`. Spaces between
/// tokens are ignored. A coefficient or exponent of 0 is a parse error.
std::vector<TermFunction> parse_terms(std::string_view input);

/// Comma-separated positive integers; an item "a..b" expands to a, a+1, ..., b.
std::vector<std::uint64_t> parse_coeffs(std::string_view input);

/// Entry point behind the dcount executable. Writes data to out and
/// diagnostics to err; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dcount::cli

#endif
