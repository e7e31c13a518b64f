#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rescnf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// DIMACS input rejected; `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation requiring Horn input received a clause with two or more
/// positive literals.
class NotHornError : public Error {
 public:
  NotHornError(std::size_t clause_index, const std::string& clause_text)
      : Error("clause " + std::to_string(clause_index + 1) + " is not Horn: " + clause_text),
        clause_index_(clause_index) {}
  std::size_t clause_index() const noexcept { return clause_index_; }

 private:
  std::size_t clause_index_;
};

class OracleLimitError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace rescnf
