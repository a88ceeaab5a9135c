#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sidon {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical "p/q" form in lowest terms, q >= 1 (integers render as "p/1").
inline std::string to_fraction_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace sidon
