#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hedonic {

// Broad failure categories; the C API maps these onto its status codes.
enum class ErrorKind { InvalidArgument, Io, Data, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_invalid(std::string msg) {
  throw Error(ErrorKind::InvalidArgument, std::move(msg));
}
[[noreturn]] inline void throw_io(std::string msg) {
  throw Error(ErrorKind::Io, std::move(msg));
}
[[noreturn]] inline void throw_data(std::string msg) {
  throw Error(ErrorKind::Data, std::move(msg));
}

}  // namespace hedonic
