#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdep {

// Base of everything the library throws on bad input or a violated
// precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 1-based position into parsed text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error("line " + std::to_string(span.line) + ", column " +
              std::to_string(span.column) + ": " + message),
        span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Both sides of an IND/MI/MDE atom must have equal length.
class ArityError : public Error {
 public:
  using Error::Error;
};

class WeightError : public Error {
 public:
  using Error::Error;
};

class DuplicateRowError : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class UnsupportedQuery : public Error {
 public:
  using Error::Error;
};

class UnsupportedAtom : public Error {
 public:
  using Error::Error;
};

class DomainTooLarge : public Error {
 public:
  using Error::Error;
};

class QueryImplied : public Error {
 public:
  using Error::Error;
};

// A constructed team failed its own semantic self-check.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdep
