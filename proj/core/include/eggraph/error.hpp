#pragma once

#include <stdexcept>
#include <string>

namespace eggraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad graph, out-of-range construction parameters, unparsable payoffs.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Payoffs are valid but belong to the wrong scenario for the requested operation.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

// The construction's sufficient inequalities have no solution for these
// payoffs, so no amount of searching can certify a witness.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// A search or iteration hit its configured cap.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace eggraph
