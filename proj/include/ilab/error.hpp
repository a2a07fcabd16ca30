#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ilab {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  Precondition,
  BudgetExhausted,
  Io,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by Graph construction; `index` is the position of the offending edge
// in the caller's input order so parsers can translate it to a line number.
class InvalidEdgeError : public Error {
 public:
  InvalidEdgeError(std::size_t index, const std::string& what)
      : Error(ErrorCode::InvalidArgument, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ilab
