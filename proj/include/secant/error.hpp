#ifndef SECANT_ERROR_HPP
#define SECANT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace secant {

enum class ErrorKind {
  InvalidArgument,
  EmptyInput,
  ShapeMismatch,
  NotSkew,
  OddSize,
  OutOfRange,
  NonHomogeneous,
  NonIntegral,
  EvenDimension,
  KernelTooBig,
  RankDeficient,
  SolutionSpace,
  NotGeneric,
  GenericityExhausted,
  Parse,
  Schema,
  MissingField,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is stable
/// and meant for programmatic checks, `what()` for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace secant

#endif  // SECANT_ERROR_HPP
