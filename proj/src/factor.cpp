#include "algdens/factor.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

namespace algdens {

namespace {

// ---------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------

// Exact test of p(sign*a/b) = 0 via b^n * p(a/b) = sum c_i (sa)^i b^(n-i),
// integer arithmetic only.
bool is_root(const IntPoly& p, const BigInt& sa, const BigInt& b) {
    const int n = p.degree();
    BigInt acc = p.coeff(n);
    BigInt bpow = 1;
    for (int i = n - 1; i >= 0; --i) {
        bpow *= b;
        acc = acc * sa + p.coeff(i) * bpow;
    }
    return acc == 0;
}

// Roots of p assuming p(0) != 0.
void nonzero_rational_roots(const IntPoly& p, std::set<Rat>& out) {
    if (p.degree() == 0) return;
    const std::vector<BigInt> nums = divisors_ascending(abs(p.constant()));
    const std::vector<BigInt> dens = divisors_ascending(abs(p.leading()));
    for (const BigInt& b : dens) {
        for (const BigInt& a : nums) {
            if (gcd(a, b) != 1) continue;
            if (is_root(p, a, b)) out.emplace(a, b);
            if (is_root(p, -a, b)) out.emplace(-a, b);
        }
    }
}

// ---------------------------------------------------------------------
// Modular prescreen: Rabin irreducibility test over F_q, q a small prime
// not dividing the leading coefficient. A positive result proves
// irreducibility over Z for primitive input; a negative one is ignored.
// ---------------------------------------------------------------------

using FqPoly = std::vector<std::uint64_t>; // low-to-high, trimmed

int fq_degree(const FqPoly& a) { return static_cast<int>(a.size()) - 1; }

void fq_trim(FqPoly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

std::uint64_t fq_inv(std::uint64_t a, std::uint64_t q) {
    // Fermat; q is a small prime and a != 0 mod q.
    std::uint64_t r = 1, base = a % q, e = q - 2;
    while (e) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return r;
}

// a*b reduced modulo the monic polynomial f, coefficients mod q.
FqPoly fq_mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& f, std::uint64_t q) {
    const int n = fq_degree(f);
    FqPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
    }
    for (int i = fq_degree(prod); i >= n; --i) {
        std::uint64_t t = prod[static_cast<std::size_t>(i)];
        if (t == 0) continue;
        prod[static_cast<std::size_t>(i)] = 0;
        for (int j = 0; j < n; ++j) {
            std::size_t k = static_cast<std::size_t>(i - n + j);
            prod[k] = (prod[k] + (q - f[static_cast<std::size_t>(j)]) * t) % q;
        }
    }
    prod.resize(static_cast<std::size_t>(n));
    if (prod.empty()) prod.push_back(0);
    fq_trim(prod);
    return prod;
}

FqPoly fq_powmod(FqPoly base, std::uint64_t e, const FqPoly& f, std::uint64_t q) {
    FqPoly r{1};
    while (e) {
        if (e & 1) r = fq_mulmod(r, base, f, q);
        base = fq_mulmod(base, base, f, q);
        e >>= 1;
    }
    return r;
}

FqPoly fq_gcd(FqPoly a, FqPoly b, std::uint64_t q) {
    fq_trim(a);
    fq_trim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        // reduce a mod b
        std::uint64_t lead_inv = fq_inv(b.back(), q);
        while (fq_degree(a) >= fq_degree(b) && !(a.size() == 1 && a[0] == 0)) {
            std::uint64_t c = a.back() * lead_inv % q;
            int shift = fq_degree(a) - fq_degree(b);
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::size_t k = static_cast<std::size_t>(shift) + j;
                a[k] = (a[k] + (q - c) * b[j]) % q;
            }
            fq_trim(a);
            if (a.size() == 1 && a[0] == 0) break;
        }
        std::swap(a, b);
    }
    return a;
}

// f mod q, made monic; empty result if the degree drops.
FqPoly reduce_monic(const IntPoly& p, std::uint64_t q) {
    FqPoly f(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        BigInt r = p.coeff(i) % static_cast<int>(q);
        if (r < 0) r += static_cast<int>(q);
        f[static_cast<std::size_t>(i)] = r.convert_to<std::uint64_t>();
    }
    if (f.back() == 0) return {};
    std::uint64_t inv = fq_inv(f.back(), q);
    for (std::uint64_t& c : f) c = c * inv % q;
    return f;
}

bool prime_divisors_of(int n, std::array<int, 3>& out, int& cnt) {
    cnt = 0;
    int m = n;
    for (int t = 2; t * t <= m; ++t) {
        if (m % t == 0) {
            out[static_cast<std::size_t>(cnt++)] = t;
            while (m % t == 0) m /= t;
        }
    }
    if (m > 1) out[static_cast<std::size_t>(cnt++)] = m;
    return cnt > 0;
}

// Rabin: f irreducible over F_q iff x^(q^n) = x mod f and
// gcd(x^(q^(n/t)) - x, f) = 1 for every prime t | n.
bool irreducible_mod_q(const IntPoly& p, std::uint64_t q) {
    const int n = p.degree();
    FqPoly f = reduce_monic(p, q);
    if (f.empty()) return false; // q divides the leading coefficient
    std::array<int, 3> ts{};
    int tcnt = 0;
    prime_divisors_of(n, ts, tcnt);

    FqPoly frob{0, 1}; // x
    for (int m = 1; m <= n; ++m) {
        frob = fq_powmod(frob, q, f, q); // x^(q^m) mod f
        bool checkpoint = false;
        for (int t = 0; t < tcnt; ++t)
            if (m == n / ts[static_cast<std::size_t>(t)]) checkpoint = true;
        if (checkpoint) {
            FqPoly diff = frob;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = (diff[1] + q - 1) % q;
            fq_trim(diff);
            FqPoly g = fq_gcd(diff, f, q);
            if (fq_degree(g) != 0) return false;
        }
    }
    return frob.size() == 2 && frob[0] == 0 && frob[1] == 1;
}

bool prescreen_irreducible(const IntPoly& p) {
    static constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};
    for (std::uint64_t q : kPrimes) {
        if (p.leading() % static_cast<int>(q) == 0) continue;
        if (irreducible_mod_q(p, q)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------
// Bounded factor-pair search. Input here is primitive, has positive
// leading coefficient, no rational root (hence nonzero constant term),
// and degree >= 4. Candidate factors are normalized to a positive
// leading coefficient; their heights always fall inside the envelope,
// so the bound only prunes.
// ---------------------------------------------------------------------

struct SearchContext {
    const IntPoly& p;
    BigInt bound;
};

bool height_ok(const IntPoly& g, const BigInt& bound) { return g.height() <= bound; }

// Signed divisors of v != 0: +d then -d, d ascending.
std::vector<BigInt> signed_divisors(const BigInt& v) {
    std::vector<BigInt> out;
    for (const BigInt& d : divisors_ascending(abs(v))) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

BigInt eval_int(const IntPoly& p, const BigInt& x) {
    BigInt acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i);
    return acc;
}

// Quadratic factor of a quartic, solved coefficient-wise. For each
// divisor assignment a2*b2 = c4, a0*b0 = c0 the cross terms give two
// linear equations in (a1, b1); the remaining middle equation is checked
// (generic case) or turned into a quadratic in a1 (degenerate case).
std::optional<IntPoly> quartic_quadratic_factor(const SearchContext& ctx) {
    const IntPoly& p = ctx.p;
    const BigInt c4 = p.coeff(4), c3 = p.coeff(3), c2 = p.coeff(2), c1 = p.coeff(1),
                 c0 = p.coeff(0);
    auto accept = [&](const BigInt& a2, const BigInt& a1, const BigInt& a0,
                      const BigInt& b2, const BigInt& b1, const BigInt& b0)
        -> std::optional<IntPoly> {
        if (a2 * b1 + a1 * b2 != c3) return std::nullopt;
        if (a2 * b0 + a1 * b1 + a0 * b2 != c2) return std::nullopt;
        if (a1 * b0 + a0 * b1 != c1) return std::nullopt;
        IntPoly g = IntPoly::descending({a2, a1, a0});
        if (!height_ok(g, ctx.bound)) return std::nullopt;
        return g;
    };
    for (const BigInt& a2 : divisors_ascending(c4)) {
        const BigInt b2 = c4 / a2;
        for (const BigInt& a0 : signed_divisors(c0)) {
            const BigInt b0 = c0 / a0;
            const BigInt det = a2 * b0 - b2 * a0;
            if (det != 0) {
                // [a2 b2; a0 b0] (b1, a1)^T = (c3, c1)^T
                const BigInt b1_num = c3 * b0 - b2 * c1;
                const BigInt a1_num = a2 * c1 - c3 * a0;
                if (b1_num % det != 0 || a1_num % det != 0) continue;
                if (auto g = accept(a2, a1_num / det, a0, b2, b1_num / det, b0)) return g;
            } else {
                // Proportional rows; consistency first, then the middle
                // coefficient becomes a quadratic in a1.
                if (c3 * b0 != b2 * c1) continue;
                // b2*a1^2 - c3*a1 + a2*(c2 - a2*b0 - a0*b2) = 0
                const BigInt qa = b2, qb = -c3, qc = a2 * (c2 - a2 * b0 - a0 * b2);
                const BigInt disc = qb * qb - 4 * qa * qc;
                if (disc < 0 || !is_perfect_square(disc)) continue;
                const BigInt root = sqrt(disc);
                const BigInt cands[2] = {-qb + root, -qb - root};
                for (const BigInt& num : cands) {
                    if (num % (2 * qa) != 0) continue;
                    const BigInt a1 = num / (2 * qa);
                    const BigInt b1_num = c3 - b2 * a1;
                    if (b1_num % a2 != 0) continue;
                    if (auto g = accept(a2, a1, a0, b2, b1_num / a2, b0)) return g;
                }
            }
        }
    }
    return std::nullopt;
}

// Degree-k factor located through its values at small integer points:
// g(s) divides p(s) for every integer s, g(a) = g(b) mod (a-b), and the
// leading coefficient divides p's. Candidate values are interpolated back
// to coefficients, screened against the height envelope and one unused
// evaluation point, then confirmed by exact division.
std::optional<IntPoly> interpolation_factor(const SearchContext& ctx, int k) {
    const IntPoly& p = ctx.p;
    const BigInt p0 = p.coeff(0);
    const BigInt p1 = eval_int(p, 1);
    const BigInt pm1 = eval_int(p, -1);
    const BigInt p2 = eval_int(p, 2);
    const BigInt pm2 = eval_int(p, -2);
    // No rational roots, so all evaluation points are nonzero.
    const std::vector<BigInt> leads = divisors_ascending(p.leading());
    const std::vector<BigInt> v0s = signed_divisors(p0);
    const std::vector<BigInt> v1s = signed_divisors(p1);
    const std::vector<BigInt> v2s = signed_divisors(pm1);
    const std::vector<BigInt> v3s = signed_divisors(p2);

    auto confirm = [&](IntPoly g, const BigInt& extra_pt,
                       const BigInt& extra_val) -> std::optional<IntPoly> {
        if (g.degree() != k) return std::nullopt;
        if (!height_ok(g, ctx.bound)) return std::nullopt;
        const BigInt ge = eval_int(g, extra_pt);
        if (ge == 0 || extra_val % ge != 0) return std::nullopt;
        if (try_divide_exact(p, g)) return g;
        return std::nullopt;
    };

    for (const BigInt& lead : leads) {
        for (const BigInt& v0 : v0s) {
            for (const BigInt& v1 : v1s) {
                if (k == 2) {
                    // g = lead*x(x-1) + (v1-v0)x + v0
                    IntPoly g = IntPoly::descending({lead, v1 - v0 - lead, v0});
                    if (auto w = confirm(g, -1, pm1)) return w;
                    continue;
                }
                for (const BigInt& v2 : v2s) {
                    if ((v1 - v2) % 2 != 0) continue;
                    // quadratic through (0,v0),(1,v1),(-1,v2)
                    const BigInt q1 = (v1 - v2) / 2;
                    const BigInt q2 = (v1 + v2) / 2 - v0;
                    if (k == 3) {
                        // g = lead*(x^3 - x) + q2 x^2 + q1 x + v0
                        IntPoly g = IntPoly::descending({lead, q2, q1 - lead, v0});
                        if (auto w = confirm(g, 2, p2)) return w;
                        continue;
                    }
                    for (const BigInt& v3 : v3s) {
                        if ((v3 - v0) % 2 != 0) continue;
                        if ((v3 - v2) % 3 != 0) continue;
                        // cubic through the four points
                        const BigInt a = v1 - v0, b = v2 - v0, c = v3 - v0;
                        if ((a + b) % 2 != 0) continue;
                        const BigInt r2 = (a + b) / 2;
                        const BigInt r3_num = c - 3 * a - b;
                        if (r3_num % 6 != 0) continue;
                        const BigInt r3 = r3_num / 6;
                        const BigInt r1 = (a - b) / 2 - r3;
                        // g = lead*(x^4 - 2x^3 - x^2 + 2x) + cubic
                        IntPoly g = IntPoly::descending(
                            {lead, r3 - 2 * lead, r2 - lead, r1 + 2 * lead, v0});
                        if (auto w = confirm(g, -2, pm2)) return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<IntPoly> bounded_factor_search(const IntPoly& p, const BigInt& bound) {
    SearchContext ctx{p, bound};
    const int n = p.degree();
    for (int k = 2; 2 * k <= n; ++k) {
        std::optional<IntPoly> g = (n == 4 && k == 2) ? quartic_quadratic_factor(ctx)
                                                      : interpolation_factor(ctx, k);
        if (g) return g;
    }
    return std::nullopt;
}

} // namespace

std::set<Rat> rational_roots(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("rational_roots: zero polynomial");
    std::set<Rat> out;
    if (p.constant() == 0) {
        out.emplace(0);
        // strip the power of x and scan the cofactor
        std::vector<BigInt> shifted(p.coeffs());
        std::size_t v = 0;
        while (shifted[v] == 0) ++v;
        shifted.erase(shifted.begin(), shifted.begin() + static_cast<long>(v));
        nonzero_rational_roots(IntPoly(std::move(shifted)), out);
    } else {
        nonzero_rational_roots(p, out);
    }
    return out;
}

BigInt factor_height_envelope(const IntPoly& p) {
    const int n = p.degree();
    return pow(BigInt(2), static_cast<unsigned>(n)) * p.height() * (n + 1);
}

IrreducibilityVerdict is_irreducible(const IntPoly& p, const FactorOptions& opts) {
    if (p.is_zero() || p.degree() == 0)
        throw InvalidInput("is_irreducible: degree must be >= 1");
    if (content(p) != 1)
        throw InvalidInput("is_irreducible: input must be primitive");
    const int n = p.degree();
    if (n > opts.degree_cap)
        throw UnsupportedDegree("is_irreducible: degree " + std::to_string(n) +
                                " exceeds cap " + std::to_string(opts.degree_cap));
    if (n == 1) return {true, std::nullopt};

    std::set<Rat> roots = rational_roots(p);
    if (!roots.empty()) {
        const Rat& r = *roots.begin();
        return {false, IntPoly::descending({denominator(r), -numerator(r)})};
    }
    if (n <= 3) return {true, std::nullopt};

    if (opts.modular_prescreen && prescreen_irreducible(p)) return {true, std::nullopt};

    // Work on a positive leading coefficient; a factor of -p divides p.
    const IntPoly q = p.leading() > 0 ? p : -p;
    if (auto g = bounded_factor_search(q, factor_height_envelope(q)))
        return {false, *g};
    return {true, std::nullopt};
}

} // namespace algdens
