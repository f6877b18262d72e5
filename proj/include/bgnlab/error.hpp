#pragma once

#include <stdexcept>
#include <string>

namespace bgnlab {

enum class ErrorKind {
  invalid_argument,
  not_invertible,
  context_mismatch,
  malformed,
  off_curve,
  wrong_order,
  not_extractable,
  opening_mismatch,
  setup_failed,
  degenerate_pairing,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bgnlab
