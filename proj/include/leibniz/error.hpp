#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input text (file syntax, bad token, index out of range).
/// `line` is 1-based; 0 means "no line information".
struct ParseError : Error {
  std::size_t line = 0;

  explicit ParseError(const std::string& msg, std::size_t line_no = 0)
      : Error(line_no ? "line " + std::to_string(line_no) + ": " + msg : msg), line(line_no) {}
};

/// Well-formed input that fails a mathematical check (Leibniz identity,
/// derivation condition). Distinct from ParseError so the CLI can map the
/// two onto different exit codes.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace leibniz
