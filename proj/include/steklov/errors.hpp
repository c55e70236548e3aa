#ifndef STEKLOV_ERRORS_HPP
#define STEKLOV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace steklov {

enum class ErrorKind {
  size,                 // coefficient / sample count does not match the grid
  domain,               // argument outside the documented range
  quadrature,           // non-finite integrand value
  invalid_generator,    // Re F < 0 or angle condition violated
  probe,                // evaluation failure at a probe point
  integration,          // step underflow or step budget exhausted
  invariance_violation, // flow left the closed domain
  degenerate_map,       // |k'| below threshold
  invalid_map,          // univalence criterion violated
  inversion,            // Newton inversion of k^{-1} failed
  mapping,              // boundary correspondence iteration failed
  degenerate_weight,    // coboundary denominator vanishes
  unsupported_data,     // data outside the representable class
};

const char* to_string(ErrorKind kind);

/// Base exception of the library. Every numerical failure carries a kind so
/// callers can map it onto exit codes or retry policies.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace steklov

#endif  // STEKLOV_ERRORS_HPP
