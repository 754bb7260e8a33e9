#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcov {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation (bad shore, wrong degree, non matching covered
/// input where one is required, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed graph6 input. Carries the offset of the offending byte.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what + " (byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

/// Graph too large for the short graph6 form.
class UnsupportedSizeError : public Error {
public:
  using Error::Error;
};

/// Operation would leave the world of simple graphs.
class MultigraphError : public Error {
public:
  using Error::Error;
};

/// Unknown catalog name.
class LookupError : public Error {
public:
  using Error::Error;
};

/// Bundled catalog data failed its load-time validation.
class CatalogIntegrityError : public Error {
public:
  using Error::Error;
};

/// Query has no answer of the requested kind (e.g. a decomposition witness
/// asked for an edge that does lie in a perfect matching).
class NotApplicableError : public Error {
public:
  using Error::Error;
};

/// Bad line in an input stream. Carries the 1-based line number.
class InputError : public Error {
public:
  InputError(const std::string& what, long line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

/// Bad command line or unknown check id.
class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace mcov
