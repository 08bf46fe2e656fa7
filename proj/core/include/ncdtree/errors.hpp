#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncdtree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data does not hold.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; `line()` is 1-based.
class ParseError : public InvalidInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class CodecError : public Error {
 public:
  using Error::Error;
};

/// The compressor ran but failed (nonzero exit, corrupt output, size limit).
class CodecFailure : public CodecError {
 public:
  using CodecError::CodecError;
};

/// The compressor cannot be run at all (e.g. command not found).
class CodecUnavailable : public CodecError {
 public:
  using CodecError::CodecError;
};

/// NCD undefined because both code lengths are zero.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace ncdtree
