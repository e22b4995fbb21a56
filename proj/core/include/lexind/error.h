#ifndef LEXIND_ERROR_H_
#define LEXIND_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexind {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the offending 1-based line number (0 if n/a).
class ParseError : public Error {
 public:
  ParseError(const std::string& path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Inconsistent options or incompatible inputs (duplicate ids, space mismatch).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A numeric precondition was violated (nonpositive accuracy, unseen idf word).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The data left nothing to work with: empty corpus, empty vocabulary,
// no pivot candidates, every row pruned.
class DataError : public Error {
 public:
  using Error::Error;
};

// An operation was applied to a value in the wrong state.
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexind

#endif  // LEXIND_ERROR_H_
