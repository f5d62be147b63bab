#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace spindec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt pow2(int e);

// 2-adic valuation of a positive integer.
int val2(long long n);

} // namespace spindec
