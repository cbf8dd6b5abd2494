#ifndef ISOMOMENT_RATIONAL_HPP
#define ISOMOMENT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace isomoment {

// Exact arithmetic types used throughout.  cpp_rational keeps values in
// canonical form: gcd(|num|, den) == 1, den >= 1, zero is 0/1.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// num/den as a canonical rational; accepts any nonzero den sign.
BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// q^e for integer e >= 0 (e < 0 allowed when q != 0).
BigRational rational_pow(const BigRational& q, int e);

double to_double(const BigRational& q);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const BigRational& q);

/// Parses "p", "p/q" or "-p/q".
BigRational rational_from_string(const std::string& s);

}  // namespace isomoment

#endif
