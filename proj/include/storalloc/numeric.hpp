#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace storalloc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero for k < 0 or k > n.
BigInt binomial(long long n, long long k);

// n * (n-1) * ... * (n-r+1); the number of ordered r-tuples with distinct
// entries from an n-set.
BigInt falling_factorial(long long n, int r);

BigInt factorial(int r);

// base^exp for non-negative exp.
BigInt ipow(long long base, int exp);

double to_double(const Rational& q);

// "p/q" (or just "p" when q == 1).
std::string fraction_string(const Rational& q);

// Shortest decimal form with the given number of significant digits.
std::string significant(double x, int digits = 12);

}  // namespace storalloc
