#pragma once

#include <stdexcept>
#include <string>

namespace lag2d {

// Failure categories surfaced by the library.  Each maps to one exception so
// callers (and the command line tool) can translate them into exit codes.
enum class errc {
  pole_in_denominator,      // a Pochhammer denominator factor vanished
  no_convergence,           // series truncation budget exhausted
  pole_at_zero,             // Laurent term evaluated at the origin
  not_a_quaternion_matrix,  // 2x2 complex matrix outside the embedded algebra
  degenerate_axis,          // polar axis undefined (vanishing imaginary part)
  quadrature_under_resolved,// rule too small for the integrand degree
  eigen_failure             // tridiagonal eigensolver did not converge
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace lag2d
