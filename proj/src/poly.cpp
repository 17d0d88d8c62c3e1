#include "algdens/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace algdens {

namespace {
const BigInt kZero(0);
}

IntPoly::IntPoly(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
    trim();
}

IntPoly IntPoly::descending(std::vector<BigInt> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPoly::height() const {
    BigInt h = 0;
    for (const BigInt& c : coeffs_) {
        BigInt a = abs(c);
        if (a > h) h = std::move(a);
    }
    return h;
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> c = coeffs_;
    for (BigInt& v : c) v = -v;
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(c));
}

BigInt content(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("content: zero polynomial");
    BigInt g = 0;
    for (const BigInt& c : p.coeffs()) {
        g = gcd(g, c); // gcd is nonnegative
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) throw InvalidInput("primitive_part: zero polynomial");
    BigInt c = content(p);
    if (c == 1) return p;
    std::vector<BigInt> out = p.coeffs();
    for (BigInt& v : out) v /= c;
    return IntPoly(std::move(out));
}

IntPoly scale_root(const IntPoly& p, const BigInt& m) {
    if (p.is_zero()) throw InvalidInput("scale_root: zero polynomial");
    if (m < 1) throw InvalidInput("scale_root: scaling factor must be >= 1");
    const int n = p.degree();
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    BigInt power = 1; // m^(n-i), built from the top coefficient down
    for (int i = n; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = p.coeff(i) * power;
        power *= m;
    }
    return primitive_part(IntPoly(std::move(out)));
}

IntPoly unscale_root(const IntPoly& p, const BigInt& m) {
    if (p.is_zero()) throw InvalidInput("unscale_root: zero polynomial");
    if (m < 1) throw InvalidInput("unscale_root: scaling factor must be >= 1");
    const int n = p.degree();
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    BigInt power = 1; // m^i
    for (int i = 0; i <= n; ++i) {
        out[static_cast<std::size_t>(i)] = p.coeff(i) * power;
        power *= m;
    }
    return primitive_part(IntPoly(std::move(out)));
}

Rat eval_rat(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (int i = p.degree(); i >= 0; --i) {
        acc *= x;
        acc += p.coeff(i);
    }
    return acc;
}

std::optional<IntPoly> try_divide_exact(const IntPoly& p, const IntPoly& g) {
    if (g.is_zero()) throw InvalidInput("try_divide_exact: zero divisor");
    if (p.is_zero()) return IntPoly();
    if (g.degree() > p.degree()) return std::nullopt;
    // Long division over Q; the quotient must come out integral with a
    // vanishing remainder.
    std::vector<Rat> rem(p.coeffs().begin(), p.coeffs().end());
    const int dq = p.degree() - g.degree();
    std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1);
    const Rat glead(g.leading());
    for (int k = dq; k >= 0; --k) {
        Rat q = rem[static_cast<std::size_t>(k + g.degree())] / glead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= g.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * Rat(g.coeff(j));
    }
    for (const Rat& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<BigInt> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (denominator(quot[i]) != 1) return std::nullopt;
        out[i] = numerator(quot[i]);
    }
    return IntPoly(std::move(out));
}

IntPoly parse_poly(std::string_view text) {
    std::vector<BigInt> desc;
    std::size_t start = 0;
    bool done = false;
    while (!done) {
        std::size_t comma = text.find(',', start);
        std::string_view tok;
        if (comma == std::string_view::npos) {
            tok = text.substr(start);
            done = true;
        } else {
            tok = text.substr(start, comma - start);
            start = comma + 1;
        }
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
        if (tok.empty()) throw InvalidInput("parse_poly: empty coefficient");
        std::size_t digits = tok[0] == '-' || tok[0] == '+' ? 1 : 0;
        if (digits == tok.size())
            throw InvalidInput("parse_poly: malformed coefficient '" + std::string(tok) + "'");
        for (std::size_t i = digits; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw InvalidInput("parse_poly: malformed coefficient '" + std::string(tok) + "'");
        desc.emplace_back(std::string(tok));
    }
    IntPoly p = IntPoly::descending(std::move(desc));
    if (p.is_zero()) throw InvalidInput("parse_poly: zero polynomial");
    return p;
}

std::string to_string(const IntPoly& p) {
    std::ostringstream out;
    for (int i = p.degree(); i >= 0; --i) {
        out << p.coeff(i).str();
        if (i > 0) out << ',';
    }
    return out.str();
}

} // namespace algdens
