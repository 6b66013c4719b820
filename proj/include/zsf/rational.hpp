#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace zsf {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // always stored reduced, den > 0

inline bool is_integer(const Rat& r) { return boost::multiprecision::denominator(r) == 1; }

inline std::string rat_text(const Rat& r) {
    const BigInt& num = boost::multiprecision::numerator(r);
    const BigInt& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// "p/q" or "p"
Rat parse_rat(const std::string& s);

}  // namespace zsf
