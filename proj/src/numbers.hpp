#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qspectra {

// Exact arbitrary-precision scalars. Every eigenvalue count in this project
// is decided over these; doubles appear only in the Jacobi cross-check.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace qspectra
