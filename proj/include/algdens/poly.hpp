#ifndef ALGDENS_POLY_HPP
#define ALGDENS_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algdens/bigint.hpp"
#include "algdens/errors.hpp"

namespace algdens {

/// Dense univariate polynomial over Z. Coefficients are stored
/// low-to-high and kept trimmed: the vector is never empty and its last
/// entry is nonzero unless the polynomial is zero (represented as {0}).
///
/// The zero polynomial is representable but rejected by every arithmetic
/// operation that needs a degree; callers that can produce it must check
/// is_zero() first.
class IntPoly {
  public:
    IntPoly() : coeffs_{BigInt(0)} {}
    explicit IntPoly(std::vector<BigInt> ascending);

    /// Build from coefficients in descending power order, the same order
    /// used by the "c_n,...,c_0" text format. `IntPoly::descending({9, 0, -2})`
    /// is 9x^2 - 2.
    static IntPoly descending(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    /// Coefficient of x^i; zero beyond the degree.
    const BigInt& coeff(int i) const;
    const BigInt& leading() const { return coeffs_.back(); }
    const BigInt& constant() const { return coeffs_.front(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// max |c_i| over all coefficients.
    BigInt height() const;
    bool is_monic() const { return leading() == 1; }

    IntPoly operator-() const;
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// gcd of all coefficients, always positive. Throws InvalidInput on the
/// zero polynomial.
BigInt content(const IntPoly& p);

/// p divided coefficient-wise by content(p). The sign of the leading
/// coefficient is preserved; sign normalization belongs to canonicalize.
IntPoly primitive_part(const IntPoly& p);

/// Primitive part of sum c_i m^(n-i) x^i. Every root r of p corresponds to
/// the root m*r of the result. m >= 1 required.
IntPoly scale_root(const IntPoly& p, const BigInt& m);

/// Primitive part of p(m*x), i.e. sum c_i m^i x^i; roots divided by m.
/// m >= 1 required.
IntPoly unscale_root(const IntPoly& p, const BigInt& m);

/// Exact evaluation p(x) in lowest terms.
Rat eval_rat(const IntPoly& p, const Rat& x);

/// Quotient p / g when g divides p exactly over Z, nullopt otherwise.
std::optional<IntPoly> try_divide_exact(const IntPoly& p, const IntPoly& g);

/// Parse the shared text format: comma-separated coefficients in
/// descending power order ("9,0,-2" is 9x^2 - 2). Leading zero
/// coefficients are dropped; the zero polynomial is rejected.
IntPoly parse_poly(std::string_view text);

/// Inverse of parse_poly; to_string(parse_poly(s)) round-trips bit-exactly
/// for canonically formatted s.
std::string to_string(const IntPoly& p);

} // namespace algdens

#endif
