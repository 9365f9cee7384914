#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace folsem {

/// Byte offsets [start, end) into the parsed input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// Structural problem with user input: unknown symbol, arity mismatch,
/// bad interpretation document. Never used for the semantic error state.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what,
                          std::optional<SourceSpan> span = std::nullopt)
      : std::runtime_error(what), span_(span) {}

  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  std::optional<SourceSpan> span_;
};

/// Syntax error. Always carries a span inside the input.
class ParseError : public MalformedInput {
 public:
  ParseError(const std::string& what, SourceSpan span)
      : MalformedInput(what, span) {}
};

/// The truth oracle needs a finite, enumerable domain.
class UnsupportedOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace folsem
