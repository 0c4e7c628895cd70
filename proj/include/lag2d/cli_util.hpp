#pragma once

#include <string>
#include <vector>

#include "lag2d/bipoly.hpp"
#include "lag2d/quaternion.hpp"

namespace lag2d {

// Shell-safe literal in the form "a+bi": an optional real part, an optional
// imaginary part ending in 'i', at least one of the two.  "1.5", "-2i",
// "0.7+0.3i", "1e-3-2.5e-1i", "i" and "-i" all parse; whitespace is ignored.
// Throws std::invalid_argument on malformed input.
cplx parse_complex(const std::string& s);

// Four comma-separated components "x0,x1,x2,x3".
quaternion parse_quaternion(const std::string& s);

// Comma-separated doubles, at least one.
std::vector<double> parse_double_list(const std::string& s);

// Fixed-format emitters shared by the command-line front end and its tests:
// shortest round-trip precision, imaginary part suppressed when zero.
std::string format_complex(cplx z);
std::string format_quaternion(const quaternion& q);

}  // namespace lag2d
