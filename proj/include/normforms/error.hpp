// Exception types. Precondition violations and malformed inputs throw
// std::invalid_argument derivatives; the named subclasses exist where callers
// need to distinguish outcomes.
#pragma once

#include <stdexcept>
#include <string>

namespace normforms {

struct FieldMismatchError : std::invalid_argument {
  explicit FieldMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct CharacteristicError : std::invalid_argument {
  explicit CharacteristicError(const std::string& what) : std::invalid_argument(what) {}
};

struct DivisionByZeroError : std::invalid_argument {
  explicit DivisionByZeroError(const std::string& what) : std::invalid_argument(what) {}
};

struct SingularMatrixError : std::invalid_argument {
  explicit SingularMatrixError(const std::string& what) : std::invalid_argument(what) {}
};

struct DisjointnessError : std::invalid_argument {
  explicit DisjointnessError(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetError : std::invalid_argument {
  explicit BudgetError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an exact decision procedure is asked for a case outside the
// supported fragment (e.g. irreducibility over an unsupported tower).
struct UnsupportedError : std::invalid_argument {
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace normforms
