#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bizon {

// cpp_int keeps small magnitudes in inline limbs and only allocates when a
// value outgrows them, so counts stay cheap until they actually get large.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

} // namespace bizon
