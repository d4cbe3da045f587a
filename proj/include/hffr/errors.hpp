#pragma once

#include <stdexcept>
#include <string>

namespace hffr {

// Failure category carried by every exception thrown from this library.
// The CLI maps categories onto process exit codes, so the split matters:
// schema errors are caller bugs (exit 2), conditioning failures are
// scenario properties (exit 3), the rest are plain errors (exit 1).
enum class errc {
  invalid_argument,
  invalid_alpha,              // pathloss exponent <= 2: interference diverges
  schema,                     // malformed scenario file
  unsupported,                // valid inputs outside a routine's regime
  degenerate_conditioning,    // edge-user event has ~zero probability
  insufficient_conditioning,  // simulation could not collect enough edge users
  grid_mismatch,              // curves evaluated on different threshold grids
  evaluation,                 // integrand produced NaN or similar
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace hffr
