#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pbv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace pbv
