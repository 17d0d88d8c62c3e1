#include "algdens/algnum.hpp"

#include <utility>

namespace algdens {

NotMinimal::NotMinimal(IntPoly witness)
    : InvalidInput("not a minimal polynomial; divisible by " + to_string(witness)),
      witness_(std::move(witness)) {}

MinPoly canonicalize(const IntPoly& p, const FactorOptions& opts) {
    if (p.is_zero() || p.degree() == 0)
        throw InvalidInput("canonicalize: degree must be >= 1");
    IntPoly q = primitive_part(p);
    if (q.leading() < 0) q = -q;
    IrreducibilityVerdict v = is_irreducible(q, opts);
    if (!v.irreducible) throw NotMinimal(*v.witness);
    return MinPoly::assume_canonical(std::move(q));
}

BigInt denominator(const MinPoly& g) {
    const IntPoly& p = g.poly();
    const int n = p.degree();
    const BigInt& cn = p.leading();
    for (const BigInt& e : divisors_ascending(cn)) {
        bool ok = true;
        BigInt epow = 1;
        for (int i = 1; i <= n && ok; ++i) {
            epow *= e;
            ok = p.coeff(n - i) * epow % cn == 0;
        }
        if (ok) return e;
    }
    // e = cn always satisfies the conditions
    throw TheoremViolation("denominator: divisor scan found no admissible value");
}

IntPoly numerator_min_poly(const MinPoly& g) {
    IntPoly f = scale_root(g.poly(), denominator(g));
    if (!f.is_monic())
        throw TheoremViolation("numerator_min_poly: scaled polynomial " + to_string(f) +
                               " is not monic; denominator computation is broken");
    return f;
}

BigInt norm_of_numerator(const IntPoly& f) {
    if (f.is_zero() || f.degree() == 0)
        throw InvalidInput("norm_of_numerator: degree must be >= 1");
    if (!f.is_monic())
        throw InvalidInput("norm_of_numerator: polynomial must be monic");
    return f.degree() % 2 == 0 ? f.constant() : -f.constant();
}

BigInt j_generator(const MinPoly& g) {
    const IntPoly& p = g.poly();
    const int n = p.degree();
    BigInt l = 1;
    for (int k = 1; k <= n; ++k) {
        // reduced denominator of s_k = +-c_{n-k}/c_n
        Rat s(p.coeff(n - k), p.leading());
        l = lcm(l, denominator(s));
    }
    return l;
}

AlgProfile profile(const MinPoly& g) {
    AlgProfile out;
    out.degree = g.degree();
    out.height = g.height();
    out.denom = denominator(g);
    out.lead = g.lead();
    out.arno = out.denom == out.lead;
    out.numerator_poly = numerator_min_poly(g);
    out.norm = norm_of_numerator(out.numerator_poly);
    return out;
}

Prop2Verdict check_prop2(const MinPoly& g) {
    const int n = g.degree();
    if (n < 2) return Prop2Verdict::NotApplicable;
    const BigInt d = denominator(g);
    if (d != g.lead()) return Prop2Verdict::NotApplicable;
    const BigInt norm = norm_of_numerator(numerator_min_poly(g));
    if (norm % pow(d, static_cast<unsigned>(n - 1)) != 0)
        throw TheoremViolation("check_prop2: " + to_string(g.poly()) + " has denominator " +
                               d.str() + " with d^(n-1) not dividing the norm " + norm.str());
    return Prop2Verdict::Holds;
}

ClassScan arno_members_of_class(const MinPoly& f) {
    if (!f.is_monic())
        throw InvalidInput("arno_members_of_class: numerator polynomial must be monic");
    const int n = f.degree();
    if (n == 1)
        throw InfiniteClass("arno_members_of_class: the class of a rational numerator is infinite");
    const BigInt norm = norm_of_numerator(f.poly());
    ClassScan scan{f, norm, {}, {}};
    for (const BigInt& q : divisors_ascending(abs(norm))) {
        // necessary condition q^(n-1) | norm
        if (norm % pow(q, static_cast<unsigned>(n - 1)) != 0) continue;
        MinPoly m = canonicalize(unscale_root(f.poly(), q));
        const BigInt d = denominator(m);
        if (d == q && d == m.lead()) scan.members.push_back({q, std::move(m)});
    }
    return scan;
}

std::vector<ClassMember> nonarno_witnesses(const MinPoly& f, int count) {
    if (!f.is_monic())
        throw InvalidInput("nonarno_witnesses: numerator polynomial must be monic");
    if (f.degree() < 2)
        throw InvalidInput("nonarno_witnesses: degree must be >= 2");
    if (count < 1)
        throw InvalidInput("nonarno_witnesses: count must be >= 1");
    const BigInt norm = norm_of_numerator(f.poly());
    std::vector<ClassMember> out;
    BigInt p = 1;
    while (static_cast<int>(out.size()) < count) {
        p = next_prime(p);
        if (norm % p == 0) continue;
        MinPoly m = canonicalize(unscale_root(f.poly(), p));
        if (m.degree() != f.degree())
            throw TheoremViolation("nonarno_witnesses: degree changed when dividing by " + p.str());
        if (denominator(m) == m.lead())
            throw TheoremViolation("nonarno_witnesses: " + to_string(m.poly()) +
                                   " is unexpectedly an Arno number");
        out.push_back({p, std::move(m)});
    }
    return out;
}

} // namespace algdens
