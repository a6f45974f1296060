#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gravop {

// All arithmetic in this library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace gravop
