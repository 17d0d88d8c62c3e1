#include "algdens/bigint.hpp"

#include <algorithm>

#include "algdens/errors.hpp"

namespace algdens {

std::vector<BigInt> divisors_ascending(const BigInt& n) {
    if (n < 1) throw InvalidInput("divisors_ascending: argument must be positive");
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<BigInt> distinct_prime_factors(const BigInt& n) {
    if (n < 1) throw InvalidInput("distinct_prime_factors: argument must be positive");
    std::vector<BigInt> out;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (BigInt d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

BigInt next_prime(const BigInt& n) {
    BigInt c = n < 2 ? BigInt(2) : n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = sqrt(n); // floor square root
    return r * r == n;
}

std::string rat_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace algdens
