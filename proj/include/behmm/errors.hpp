#pragma once

#include <stdexcept>
#include <string>

namespace behmm {

// Process exit codes the CLI maps each error category to.
enum class ErrorCode : int {
  parse = 2,
  validation = 3,
  budget = 4,
  degenerate = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(ErrorCode::validation, what) {}
};

struct DimensionMismatch : ValidationError {
  explicit DimensionMismatch(const std::string& what) : ValidationError(what) {}
};

struct IndexOutOfRange : ValidationError {
  explicit IndexOutOfRange(const std::string& what) : ValidationError(what) {}
};

struct NotHermitian : ValidationError {
  explicit NotHermitian(const std::string& what) : ValidationError(what) {}
};

struct EmptyWord : ValidationError {
  explicit EmptyWord(const std::string& what) : ValidationError(what) {}
};

struct NotDensity : ValidationError {
  explicit NotDensity(const std::string& what) : ValidationError(what) {}
};

struct NotUnital : ValidationError {
  explicit NotUnital(const std::string& what) : ValidationError(what) {}
};

struct NotCP : ValidationError {
  explicit NotCP(const std::string& what) : ValidationError(what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(ErrorCode::budget, what) {}
};

struct DegenerateTrace : Error {
  explicit DegenerateTrace(const std::string& what) : Error(ErrorCode::degenerate, what) {}
};

struct UndefinedRecurrence : Error {
  explicit UndefinedRecurrence(const std::string& what) : Error(ErrorCode::degenerate, what) {}
};

}  // namespace behmm
