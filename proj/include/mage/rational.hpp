#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace mage {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps values in lowest terms with a positive denominator and
// represents zero as 0/1, which is exactly the canonical form we rely on for
// structural equality and serialization.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

} // namespace mage
