#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trilie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An invariant that holds by theorem was violated; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A truncated operator series was queried beyond its known order.
class SeriesOrderError : public Error {
 public:
  SeriesOrderError(unsigned required, unsigned available)
      : Error("insufficient series order: need " + std::to_string(required) +
              ", have " + std::to_string(available)),
        required_(required),
        available_(available) {}

  unsigned required() const noexcept { return required_; }
  unsigned available() const noexcept { return available_; }

 private:
  unsigned required_;
  unsigned available_;
};

/// Byte offsets [start, end) into parsed text.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

/// Rejection of textual input. Syntax errors and semantic errors (well-formed
/// text denoting an invalid value) are distinguished by `semantic()`.
class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string expected, std::string found, bool semantic = false)
      : Error(format(span, expected, found, semantic)),
        span_(span),
        expected_(std::move(expected)),
        found_(std::move(found)),
        semantic_(semantic) {}

  const SourceSpan& span() const noexcept { return span_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }
  bool semantic() const noexcept { return semantic_; }

 private:
  static std::string format(SourceSpan span, const std::string& expected,
                            const std::string& found, bool semantic) {
    std::string where = "[" + std::to_string(span.start) + "," + std::to_string(span.end) + ")";
    if (semantic) return "semantic error at " + where + ": " + expected + " (found '" + found + "')";
    return "parse error at " + where + ": expected " + expected + ", found '" + found + "'";
  }

  SourceSpan span_;
  std::string expected_;
  std::string found_;
  bool semantic_;
};

}  // namespace trilie
