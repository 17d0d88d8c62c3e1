#ifndef ALGDENS_FACTOR_HPP
#define ALGDENS_FACTOR_HPP

#include <optional>
#include <set>

#include "algdens/poly.hpp"

namespace algdens {

struct IrreducibilityVerdict {
    bool irreducible = false;
    /// A nontrivial factor dividing the input with integer quotient,
    /// present exactly when irreducible is false.
    std::optional<IntPoly> witness;
};

struct FactorOptions {
    /// Degrees above the cap are refused (UnsupportedDegree), never
    /// silently approximated.
    int degree_cap = 8;
    /// Reduction modulo a small prime not dividing the leading
    /// coefficient. Irreducible mod p implies irreducible over Z, so the
    /// prescreen can only short-circuit the bounded search, never flip
    /// its verdict.
    bool modular_prescreen = true;
};

/// Exactly the rational roots of p, each in lowest terms. Candidates are
/// +-(divisor of the constant term)/(divisor of the leading coefficient),
/// plus 0 when the constant term vanishes.
std::set<Rat> rational_roots(const IntPoly& p);

/// Decide irreducibility over Z of a primitive polynomial.
///
/// Degree 1 is always irreducible. Degrees 2 and 3 are irreducible iff
/// they have no rational root. Degree >= 4 additionally runs a complete
/// bounded search for factor pairs of degrees (k, n-k), 2 <= k <= n/2;
/// candidate factor heights are confined by the envelope
/// 2^n * H(p) * (n+1), which dominates the Mignotte factor bound.
IrreducibilityVerdict is_irreducible(const IntPoly& p, const FactorOptions& opts = {});

/// 2^n * H(p) * (n+1): the candidate-factor height envelope used by the
/// bounded search.
BigInt factor_height_envelope(const IntPoly& p);

} // namespace algdens

#endif
