#pragma once

#include <stdexcept>
#include <string>

namespace mjlab {

enum class ErrorKind {
  DomainError,
  ZeroArgument,
  StencilOutOfDomain,
  NonFinite,
  TruncationOverflow,
  PoleAtTheta,
  PoleAtAppell,
  JetUnavailable,
  HUndefined,
  NotThetaDecomposable,
  ParseError,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  bool is_pole() const { return kind_ == ErrorKind::PoleAtTheta || kind_ == ErrorKind::PoleAtAppell; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mjlab
