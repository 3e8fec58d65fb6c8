#pragma once

#include <stdexcept>
#include <string>

namespace rankdel {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotConfluentOrder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionUnmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUniqueMax : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConfluentMetrics : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientNeighbors : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rankdel
