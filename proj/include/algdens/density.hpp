#ifndef ALGDENS_DENSITY_HPP
#define ALGDENS_DENSITY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "algdens/algnum.hpp"

namespace algdens {

/// roots: count algebraic numbers, i.e. each polynomial weighted by its
/// degree (an irreducible polynomial of degree d has d conjugate roots,
/// all sharing the Arno property). polys: count polynomials.
enum class Weighting { roots, polys };

struct CountRow {
    int degree = 0;
    std::uint64_t num_polys = 0;
    std::uint64_t num_algnums = 0; // degree * num_polys
    std::uint64_t arno_polys = 0;
    std::uint64_t arno_algnums = 0;
    Rat ratio; // arno/total under the selected weighting, exact
};

struct DensityReport {
    int max_degree = 0;
    int height = 0;
    Weighting weight = Weighting::roots;
    bool include_degree_1 = true;
    std::vector<CountRow> rows;
    std::uint64_t cumulative_total = 0; // weighted union over included degrees
    std::uint64_t cumulative_arno = 0;
    Rat cumulative_ratio;
    double zeta3_inv = 0.0;
    double delta = 0.0;
};

/// Exactly the canonical minimal polynomials of the given degree with all
/// |c_i| <= height (leading coefficient in [1, height]), each once, in
/// lexicographic order of the descending coefficient tuple.
std::vector<MinPoly> enumerate_canonical(int degree, int height);

/// Streaming form of enumerate_canonical, same order, without
/// materializing the sequence.
void for_each_canonical(int degree, int height,
                        const std::function<void(const MinPoly&)>& visit);

/// (|A_d(H)|, |A^_d(H)|): canonical polynomials of degree d and height
/// <= H, and the Arno subset, under the chosen weighting. The coefficient
/// space is partitioned into disjoint blocks processed by `jobs` workers;
/// counts merge associatively, so results are independent of the worker
/// count.
std::pair<std::uint64_t, std::uint64_t> count_sets(int degree, int height,
                                                   Weighting weight, int jobs = 1);

/// Per-degree rows plus the cumulative ratio over all included degrees,
/// with the 1/zeta(3) reference and its distance from the cumulative
/// ratio. Byte-deterministic for a fixed configuration regardless of
/// `jobs`.
DensityReport density_report(int max_degree, int height, Weighting weight,
                             bool include_degree_1 = true, int jobs = 1);

/// 1 / sum_{n>=1} n^-3, truncated once the integral tail bound
/// 1/(2N^2) <= tolerance guarantees the requested accuracy of the final
/// inverted value.
double zeta3_inverse(double tolerance);

/// CSV rows: degree,num_polys,num_algnums,arno_polys,arno_algnums,ratio,
/// cumulative_ratio,zeta3_inv,delta — one row per degree, then a
/// "cumulative" row. Ratios carry six decimals.
void write_report_csv(const DensityReport& report, std::ostream& out);

} // namespace algdens

#endif
