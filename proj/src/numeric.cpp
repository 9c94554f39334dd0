#include "storalloc/numeric.hpp"

#include <cstdio>

namespace storalloc {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

BigInt falling_factorial(long long n, int r) {
    BigInt result = 1;
    for (int i = 0; i < r; ++i) result *= (n - i);
    return result;
}

BigInt factorial(int r) {
    BigInt result = 1;
    for (int i = 2; i <= r; ++i) result *= i;
    return result;
}

BigInt ipow(long long base, int exp) {
    BigInt result = 1;
    BigInt b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

std::string fraction_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string significant(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

}  // namespace storalloc
