#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hnp {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<std::int64_t>;
using IntVec = Vec<std::int64_t>;

enum class ErrorKind {
  SpecInvalid,
  OrderBudgetExceeded,
  NotPrime,
  PreconditionFailed,
  SearchBudgetExceeded,
  EmptyFamily,
  GroupMismatch,
  BudgetExceeded,
  NotCyclic,
  HypothesisViolated,
  CertificateUnavailable,
  NotCoprime,
  ParseError,
  SchemaError,
  Overflow,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hnp
