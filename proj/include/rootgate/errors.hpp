#pragma once

#include <stdexcept>
#include <string>

namespace rootgate {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A (family, rank) pair outside the supported range, e.g. D3 or B1.
struct InvalidRankError : Error {
  using Error::Error;
};

// Reflection closure failed to stabilize (the input matrix is not of finite type).
struct NonConvergenceError : Error {
  using Error::Error;
};

// A Root value handed to an operation does not belong to the root system in play.
struct RootNotInSystemError : Error {
  using Error::Error;
};

// The requested corank exceeds what the rank allows.
struct RankTooSmallError : Error {
  using Error::Error;
};

// Exhaustive subset scans are refused above rank 8 unless forced.
struct RankTooLargeError : Error {
  using Error::Error;
};

// Invariants of an algebra without any non-compact factor are undefined.
struct NoNoncompactFactorError : Error {
  using Error::Error;
};

// A syntactically valid algebra name outside the supported catalog.
struct UnsupportedAlgebraError : Error {
  using Error::Error;
};

// A restricted root system was requested for a compact factor.
struct CompactFactorError : Error {
  using Error::Error;
};

// Syntax error in the algebra grammar; position is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rootgate
