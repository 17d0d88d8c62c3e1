#include "algdens/density.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <thread>

namespace algdens {

namespace {

// ---------------------------------------------------------------------
// Tuple classification. Coefficients run in descending power order,
// c[0] = leading >= 1. Two interchangeable routes: an int64 route for
// degree <= 3 whose intermediates provably fit (|c| * H^3 * H <= 4H^4 <
// 2^63 up to H = 30000), and an exact route on BigInt that also covers
// degree >= 4 through the factor module. Tests pin both routes to each
// other.
// ---------------------------------------------------------------------

enum class Cls { Skip, NonArno, Arno };

constexpr int kFastHeightCap = 30000;

struct DivisorTable {
    std::vector<std::vector<std::int32_t>> divs;
    explicit DivisorTable(int h) : divs(static_cast<std::size_t>(h) + 1) {
        for (int d = 1; d <= h; ++d)
            for (int v = d; v <= h; v += d)
                divs[static_cast<std::size_t>(v)].push_back(d);
    }
    const std::vector<std::int32_t>& of(std::int64_t v) const {
        return divs[static_cast<std::size_t>(v)];
    }
};

bool square64(std::int64_t x) {
    if (x < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool primitive64(const std::int64_t* c, int deg) {
    std::int64_t g = c[0];
    for (int i = 1; i <= deg && g != 1; ++i) g = gcd64(g, c[i]);
    return g == 1;
}

bool cubic_has_rational_root64(const std::int64_t* c, const DivisorTable& table) {
    const std::int64_t c3 = c[0], c2 = c[1], c1 = c[2], c0 = c[3];
    const std::int64_t p1 = c3 + c2 + c1 + c0;
    if (p1 == 0) return true; // root 1
    const std::int64_t pm1 = -c3 + c2 - c1 + c0;
    if (pm1 == 0) return true; // root -1
    for (std::int64_t b : table.of(c3)) {
        const std::int64_t b2 = b * b, b3 = b2 * b;
        for (std::int64_t a : table.of(c0 < 0 ? -c0 : c0)) {
            if (a == 1 && b == 1) continue; // +-1 handled above
            if (gcd64(a, b) != 1) continue;
            for (std::int64_t sa : {a, -a}) {
                // (b - sa) | p(1) and (b + sa) | p(-1) for the root sa/b
                if (p1 % (b - sa) != 0) continue;
                if (pm1 % (b + sa) != 0) continue;
                if (((c3 * sa + c2 * b) * sa + c1 * b2) * sa + c0 * b3 == 0) return true;
            }
        }
    }
    return false;
}

// Least admissible divisor equals the leading coefficient, i.e. no
// proper divisor e of c_n has c_n | c_{n-i} e^i for all i.
bool arno64(const std::int64_t* c, int deg, const DivisorTable& table) {
    const std::int64_t cn = c[0];
    for (std::int64_t e : table.of(cn)) {
        if (e == cn) break;
        bool ok = true;
        std::int64_t epow = 1;
        for (int i = 1; i <= deg && ok; ++i) {
            epow *= e;
            ok = c[i] * epow % cn == 0;
        }
        if (ok) return false;
    }
    return true;
}

Cls classify_fast(const std::int64_t* c, int deg, const DivisorTable& table) {
    if (!primitive64(c, deg)) return Cls::Skip;
    switch (deg) {
        case 1:
            break;
        case 2: {
            if (c[2] == 0) return Cls::Skip;
            const std::int64_t disc = c[1] * c[1] - 4 * c[0] * c[2];
            if (square64(disc)) return Cls::Skip;
            break;
        }
        default:
            if (c[3] == 0) return Cls::Skip;
            if (cubic_has_rational_root64(c, table)) return Cls::Skip;
            break;
    }
    return arno64(c, deg, table) ? Cls::Arno : Cls::NonArno;
}

IntPoly tuple_to_poly(const std::int64_t* c, int deg) {
    std::vector<BigInt> desc(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) desc[static_cast<std::size_t>(i)] = c[i];
    return IntPoly::descending(std::move(desc));
}

Cls classify_exact(const std::int64_t* c, int deg) {
    IntPoly p = tuple_to_poly(c, deg);
    if (content(p) != 1) return Cls::Skip;
    if (!is_irreducible(p).irreducible) return Cls::Skip;
    MinPoly g = MinPoly::assume_canonical(std::move(p));
    return denominator(g) == g.lead() ? Cls::Arno : Cls::NonArno;
}

struct Engine {
    int degree;
    int height;
    bool fast;
    DivisorTable table;

    Engine(int degree_, int height_)
        : degree(degree_),
          height(height_),
          fast(degree_ <= 3 && height_ <= kFastHeightCap),
          table(fast ? height_ : 1) {}

    Cls classify(const std::int64_t* c) const {
        return fast ? classify_fast(c, degree, table) : classify_exact(c, degree);
    }

    // All tuples with the leading coefficient(s) fixed by `block`, in
    // lexicographic order of the descending coefficient vector.
    template <class Fn>
    void scan_block(std::int64_t lead, std::int64_t second, Fn&& fn) const {
        std::int64_t c[10];
        c[0] = lead;
        int fixed = 1;
        if (degree >= 2) {
            c[1] = second;
            fixed = 2;
        }
        for (int i = fixed; i <= degree; ++i) c[i] = -height;
        for (;;) {
            fn(c);
            int i = degree;
            for (; i >= fixed; --i) {
                if (++c[i] <= height) break;
                c[i] = -height;
            }
            if (i < fixed) return;
        }
    }

    std::int64_t block_count() const {
        return degree >= 2 ? static_cast<std::int64_t>(height) * (2 * height + 1)
                           : height;
    }

    // block index -> (lead, second), ordered so that ascending block index
    // is ascending lexicographic order.
    std::pair<std::int64_t, std::int64_t> block(std::int64_t idx) const {
        if (degree < 2) return {idx + 1, 0};
        const std::int64_t span = 2 * height + 1;
        return {idx / span + 1, idx % span - height};
    }
};

void validate_bounds(int degree, int height) {
    if (degree < 1 || height < 1)
        throw InvalidInput("enumeration bounds must be >= 1");
    if (degree > FactorOptions{}.degree_cap)
        throw UnsupportedDegree("enumeration degree " + std::to_string(degree) +
                                " exceeds the factor search cap");
}

struct BlockCount {
    std::uint64_t total = 0;
    std::uint64_t arno = 0;
};

std::vector<BlockCount> count_blocks(const Engine& eng, int jobs) {
    const std::int64_t nblocks = eng.block_count();
    std::vector<BlockCount> partial(static_cast<std::size_t>(nblocks));
    auto work = [&](std::int64_t idx) {
        auto [lead, second] = eng.block(idx);
        BlockCount& bc = partial[static_cast<std::size_t>(idx)];
        eng.scan_block(lead, second, [&](const std::int64_t* c) {
            switch (eng.classify(c)) {
                case Cls::Skip: break;
                case Cls::Arno: ++bc.arno; [[fallthrough]];
                case Cls::NonArno: ++bc.total;
            }
        });
    };
    if (jobs <= 1) {
        for (std::int64_t i = 0; i < nblocks; ++i) work(i);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::int64_t idx = next.fetch_add(1);
                    if (idx >= nblocks) return;
                    work(idx);
                }
            });
        for (std::thread& th : pool) th.join();
    }
    return partial;
}

std::pair<std::uint64_t, std::uint64_t> count_polys(int degree, int height, int jobs) {
    Engine eng(degree, height);
    std::uint64_t total = 0, arno = 0;
    for (const BlockCount& bc : count_blocks(eng, jobs)) {
        total += bc.total;
        arno += bc.arno;
    }
    return {total, arno};
}

std::string fixed6(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(r));
    return buf;
}

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

} // namespace

std::vector<MinPoly> enumerate_canonical(int degree, int height) {
    std::vector<MinPoly> out;
    for_each_canonical(degree, height,
                       [&](const MinPoly& g) { out.push_back(g); });
    return out;
}

void for_each_canonical(int degree, int height,
                        const std::function<void(const MinPoly&)>& visit) {
    validate_bounds(degree, height);
    Engine eng(degree, height);
    const std::int64_t nblocks = eng.block_count();
    for (std::int64_t idx = 0; idx < nblocks; ++idx) {
        auto [lead, second] = eng.block(idx);
        eng.scan_block(lead, second, [&](const std::int64_t* c) {
            if (eng.classify(c) == Cls::Skip) return;
            visit(MinPoly::assume_canonical(tuple_to_poly(c, degree)));
        });
    }
}

std::pair<std::uint64_t, std::uint64_t> count_sets(int degree, int height,
                                                   Weighting weight, int jobs) {
    validate_bounds(degree, height);
    if (jobs < 1) throw InvalidInput("count_sets: worker count must be >= 1");
    auto [total, arno] = count_polys(degree, height, jobs);
    if (weight == Weighting::roots) {
        total *= static_cast<std::uint64_t>(degree);
        arno *= static_cast<std::uint64_t>(degree);
    }
    return {total, arno};
}

DensityReport density_report(int max_degree, int height, Weighting weight,
                             bool include_degree_1, int jobs) {
    validate_bounds(max_degree, height);
    if (jobs < 1) throw InvalidInput("density_report: worker count must be >= 1");
    const int first = include_degree_1 ? 1 : 2;
    if (first > max_degree)
        throw InvalidInput("density_report: no degrees left after excluding degree 1");
    DensityReport rep;
    rep.max_degree = max_degree;
    rep.height = height;
    rep.weight = weight;
    rep.include_degree_1 = include_degree_1;
    for (int d = first; d <= max_degree; ++d) {
        auto [polys, arno] = count_polys(d, height, jobs);
        CountRow row;
        row.degree = d;
        row.num_polys = polys;
        row.num_algnums = polys * static_cast<std::uint64_t>(d);
        row.arno_polys = arno;
        row.arno_algnums = arno * static_cast<std::uint64_t>(d);
        row.ratio = polys == 0 ? Rat(0) : Rat(arno, polys);
        const bool by_roots = weight == Weighting::roots;
        rep.cumulative_total += by_roots ? row.num_algnums : row.num_polys;
        rep.cumulative_arno += by_roots ? row.arno_algnums : row.arno_polys;
        rep.rows.push_back(std::move(row));
    }
    rep.cumulative_ratio = rep.cumulative_total == 0
                               ? Rat(0)
                               : Rat(rep.cumulative_arno, rep.cumulative_total);
    rep.zeta3_inv = zeta3_inverse(1e-9);
    rep.delta = std::abs(static_cast<double>(rep.cumulative_ratio) - rep.zeta3_inv);
    return rep;
}

double zeta3_inverse(double tolerance) {
    if (!(tolerance > 0)) throw InvalidInput("zeta3_inverse: tolerance must be positive");
    // Tail of sum n^-3 past N is below the integral bound 1/(2N^2), and
    // the error survives inversion shrunk by zeta(3)^2 > 1.
    double nd = std::sqrt(1.0 / (2.0 * tolerance));
    auto n = static_cast<std::uint64_t>(std::ceil(nd));
    if (n < 2) n = 2;
    // past ~5e7 terms the tail is below double resolution
    if (n > 50000000) n = 50000000;
    long double sum = 0.0L;
    for (std::uint64_t k = n; k >= 1; --k) {
        const long double x = static_cast<long double>(k);
        sum += 1.0L / (x * x * x);
    }
    return static_cast<double>(1.0L / sum);
}

void write_report_csv(const DensityReport& rep, std::ostream& out) {
    out << "degree,num_polys,num_algnums,arno_polys,arno_algnums,ratio,"
           "cumulative_ratio,zeta3_inv,delta\n";
    const bool by_roots = rep.weight == Weighting::roots;
    std::uint64_t run_total = 0, run_arno = 0;
    for (const CountRow& row : rep.rows) {
        run_total += by_roots ? row.num_algnums : row.num_polys;
        run_arno += by_roots ? row.arno_algnums : row.arno_polys;
        const Rat cum = run_total == 0 ? Rat(0) : Rat(run_arno, run_total);
        const double delta = std::abs(static_cast<double>(cum) - rep.zeta3_inv);
        out << row.degree << ',' << row.num_polys << ',' << row.num_algnums << ','
            << row.arno_polys << ',' << row.arno_algnums << ',' << fixed6(row.ratio)
            << ',' << fixed6(cum) << ',' << fixed9(rep.zeta3_inv) << ','
            << fixed9(delta) << '\n';
    }
    std::uint64_t polys = 0, algnums = 0, arno_polys = 0, arno_algnums = 0;
    for (const CountRow& row : rep.rows) {
        polys += row.num_polys;
        algnums += row.num_algnums;
        arno_polys += row.arno_polys;
        arno_algnums += row.arno_algnums;
    }
    out << "cumulative," << polys << ',' << algnums << ',' << arno_polys << ','
        << arno_algnums << ',' << fixed6(rep.cumulative_ratio) << ','
        << fixed6(rep.cumulative_ratio) << ',' << fixed9(rep.zeta3_inv) << ','
        << fixed9(rep.delta) << '\n';
}

} // namespace algdens
