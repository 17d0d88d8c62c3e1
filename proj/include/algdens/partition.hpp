#ifndef ALGDENS_PARTITION_HPP
#define ALGDENS_PARTITION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "algdens/bigint.hpp"

namespace algdens {

// Partition of E = {2, 3, 4, ...} into classes
//   E_i = {2i} u {2^i k + 1 : k >= 1 odd},   i >= 1.
// Every class holds exactly one even number, yet evens have density 1/2
// in E.

struct ClassId {
    std::int64_t i = 0;
    friend bool operator==(const ClassId&, const ClassId&) = default;
};

/// The unique class containing m >= 2: m/2 for even m, otherwise the
/// exact power of 2 dividing m-1.
ClassId class_index(std::int64_t m);

/// Members of E_i up to `limit`, ascending. Classes are generated from
/// the closed-form membership rule, never materialized.
std::vector<std::int64_t> class_members(ClassId id, std::int64_t limit);

struct PartitionReport {
    std::int64_t limit = 0;
    std::uint64_t classes_checked = 0;
    std::uint64_t members_seen = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustively check on [2, N] that every integer lies in exactly one
/// class (counted independently of class_index) and that each class
/// intersecting the range has exactly one even member, 2i. Violations are
/// reported, not thrown.
PartitionReport verify_partition(std::int64_t n, int jobs = 1);

/// Exact density of even numbers in E up to N: floor(N/2) / (N - 1).
Rat evens_density(std::int64_t n);

} // namespace algdens

#endif
