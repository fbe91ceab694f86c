#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bipolar {

enum class ErrorKind {
  Malformed,          // structurally broken input (unknown ids, duplicates)
  BadComposability,
  BadIdentity,
  NotAssociative,
  NotFunctor,
  BaseMismatch,
  UnknownObject,
  NotFibration,
  NotNatural,
  NotEndo,
  BudgetExceeded,
  SizeLimit,
  UncountableChains,
  UnsupportedShape,
  Schema,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witnesses = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witnesses_(std::move(witnesses)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::string>& witnesses() const { return witnesses_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witnesses_;
};

}  // namespace bipolar
