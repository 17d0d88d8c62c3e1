#ifndef ALGDENS_BIGINT_HPP
#define ALGDENS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace algdens {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps
// values in lowest terms with a positive denominator, which is exactly the
// Rat contract.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

/// All positive divisors of n >= 1 in ascending order (trial division).
std::vector<BigInt> divisors_ascending(const BigInt& n);

/// Distinct prime factors of n >= 1, ascending. Empty for n = 1.
std::vector<BigInt> distinct_prime_factors(const BigInt& n);

bool is_prime(const BigInt& n);

/// Smallest prime strictly greater than n.
BigInt next_prime(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// "p/q" with q > 0, lowest terms ("-2/9", "1/1").
std::string rat_string(const Rat& r);

} // namespace algdens

#endif
