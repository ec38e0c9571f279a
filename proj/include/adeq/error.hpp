#pragma once

#include <stdexcept>
#include <string>

namespace adeq {

enum class ErrKind {
  ZeroPolynomial,
  EndpointRoot,
  ZeroOrMultipleRoots,
  NegativeRadicand,
  PrecisionExhausted,
  HypothesisViolated,
  Unresolved,
  Indistinguishable,
  NormTooLarge,
  WrongPrime,
  CapExceeded,
  SizeCapExceeded,
  BudgetExceeded,
  AmbiguousEquality,
  ZeroTarget,
  BackendMismatch,
  TowerMismatch,
  RadicalDependency,
  DegreeTooSmall,
  NoDerivation,
  BadInput,
  Internal,
};

const char* err_kind_name(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& what)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace adeq
