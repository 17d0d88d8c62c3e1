#ifndef ALGDENS_ALGNUM_HPP
#define ALGDENS_ALGNUM_HPP

#include <string>
#include <utility>
#include <vector>

#include "algdens/factor.hpp"
#include "algdens/poly.hpp"

namespace algdens {

/// canonicalize() found a nontrivial factor; the input has no minimal
/// polynomial. Carries the factor as evidence.
class NotMinimal : public InvalidInput {
  public:
    explicit NotMinimal(IntPoly witness);
    const IntPoly& witness() const { return witness_; }

  private:
    IntPoly witness_;
};

/// Canonical minimal polynomial over Z: primitive, irreducible, positive
/// leading coefficient, degree >= 1. Stands for the full conjugacy class
/// of its roots, which share degree, height, denominator and leading
/// coefficient.
class MinPoly {
  public:
    const IntPoly& poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    const BigInt& lead() const { return poly_.leading(); }
    BigInt height() const { return poly_.height(); }
    bool is_monic() const { return poly_.is_monic(); }

    /// Wrap a polynomial already known to be canonical, skipping the
    /// irreducibility check. For enumeration engines that have just
    /// verified the form themselves; everything else goes through
    /// canonicalize().
    static MinPoly assume_canonical(IntPoly p) { return MinPoly(std::move(p)); }

    friend bool operator==(const MinPoly& a, const MinPoly& b) = default;

  private:
    explicit MinPoly(IntPoly p) : poly_(std::move(p)) {}
    IntPoly poly_;
};

/// Derived invariants of a minimal polynomial: the denominator d divides
/// the leading coefficient c, c divides d^degree, and the number is an
/// Arno number exactly when d = c.
struct AlgProfile {
    int degree = 0;
    BigInt height;
    BigInt denom;
    BigInt lead;
    bool arno = false;
    IntPoly numerator_poly; // monic minimal polynomial of theta = d*gamma
    BigInt norm;            // (-1)^degree * constant term of numerator_poly
};

struct ClassMember {
    BigInt q;
    MinPoly minpoly;
};

/// Scan of the class of algebraic numbers sharing the numerator theta:
/// the finitely many Arno members theta/q, plus non-Arno witnesses
/// theta/p for primes p not dividing the norm.
struct ClassScan {
    MinPoly numerator_poly;
    BigInt norm;
    std::vector<ClassMember> members;
    std::vector<ClassMember> witnesses;
};

enum class Prop2Verdict { Holds, NotApplicable };

/// Primitive part, sign-flipped to a positive leading coefficient,
/// verified irreducible. Throws NotMinimal on reducible input.
MinPoly canonicalize(const IntPoly& p, const FactorOptions& opts = {});

/// The smallest positive integer d such that d*gamma is an algebraic
/// integer: the least divisor d of c_n with c_n | c_{n-i} * d^i for all
/// i = 1..n. Found by ascending divisor scan, no root-finding involved.
BigInt denominator(const MinPoly& g);

/// Monic minimal polynomial of the numerator theta = d*gamma, obtained by
/// scale_root(g, denominator(g)). A non-monic result would mean the
/// denominator computation is wrong and throws TheoremViolation.
IntPoly numerator_min_poly(const MinPoly& g);

/// Field norm of the algebraic integer with monic minimal polynomial f:
/// (-1)^degree * constant term.
BigInt norm_of_numerator(const IntPoly& f);

/// Positive generator of the ideal of integers k clearing all elementary
/// symmetric functions of the conjugates: lcm over k = 1..n of the
/// reduced denominators of c_{n-k}/c_n. Equals the leading coefficient.
BigInt j_generator(const MinPoly& g);

AlgProfile profile(const MinPoly& g);

/// For Arno numbers of degree >= 2, assert denom^(degree-1) divides the
/// norm of the numerator (a theorem; failure is TheoremViolation).
/// NotApplicable otherwise.
Prop2Verdict check_prop2(const MinPoly& g);

/// All Arno numbers theta/q in the class of the algebraic integer theta
/// with monic minimal polynomial f, degree >= 2. Candidates are the q
/// with q^(degree-1) dividing the norm; membership additionally requires
/// denominator exactly q and the Arno property. Members ascend by q.
/// Degree 1 throws InfiniteClass. witnesses is left empty.
ClassScan arno_members_of_class(const MinPoly& f);

/// The first `count` pairs (p, minimal polynomial of theta/p) over primes
/// p not dividing the norm of theta. Each is verified non-Arno and of the
/// same degree as f.
std::vector<ClassMember> nonarno_witnesses(const MinPoly& f, int count);

} // namespace algdens

#endif
