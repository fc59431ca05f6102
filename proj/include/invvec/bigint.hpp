#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace invvec {

// All counts, characters and coefficients are exact signed integers.  Values
// stay tiny at desk scale, but nothing in the public contract may overflow
// silently, so the arbitrary-precision type is used throughout.
using Int = boost::multiprecision::cpp_int;

} // namespace invvec
