#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dehnkit {

// Syllable exponents are unbounded: concatenated rewrites of the long
// relators can push powers past any fixed width.
using Exponent = boost::multiprecision::cpp_int;

}  // namespace dehnkit
