#include "secant/error.hpp"

namespace secant {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::NotSkew: return "not-skew";
    case ErrorKind::OddSize: return "odd-size";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NonHomogeneous: return "non-homogeneous";
    case ErrorKind::NonIntegral: return "non-integral";
    case ErrorKind::EvenDimension: return "even-dimension";
    case ErrorKind::KernelTooBig: return "kernel-too-big";
    case ErrorKind::RankDeficient: return "rank-deficient";
    case ErrorKind::SolutionSpace: return "solution-space";
    case ErrorKind::NotGeneric: return "not-generic";
    case ErrorKind::GenericityExhausted: return "genericity-exhausted";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::MissingField: return "missing-field";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace secant
