#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace spotted {

using Rational = boost::rational<std::int64_t>;

/// Exact decimal when the denominator divides a power of ten, else "p/q".
std::string to_string(const Rational& r);
/// Fixed-point with `digits` decimals, rounded half away from zero.
std::string to_fixed(const Rational& r, int digits);

}  // namespace spotted
