#include "algdens/partition.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "algdens/errors.hpp"

namespace algdens {

namespace {

// Membership test straight from the class definition, independent of
// class_index: m is in E_i iff m = 2i, or m is odd with m - 1 = 2^i * k
// for odd k.
bool in_class(std::int64_t m, std::int64_t i) {
    if (m == 2 * i) return true;
    if (m % 2 == 0) return false;
    if (i >= 63) return false;
    const std::int64_t p2 = std::int64_t{1} << i;
    if ((m - 1) % p2 != 0) return false;
    return ((m - 1) / p2) % 2 == 1;
}

int v2(std::int64_t v) {
    return std::countr_zero(static_cast<std::uint64_t>(v));
}

} // namespace

ClassId class_index(std::int64_t m) {
    if (m < 2) throw InvalidInput("class_index: argument must be >= 2");
    if (m % 2 == 0) return ClassId{m / 2};
    return ClassId{v2(m - 1)};
}

std::vector<std::int64_t> class_members(ClassId id, std::int64_t limit) {
    if (id.i < 1) throw InvalidInput("class_members: class index must be >= 1");
    if (limit < 2) throw InvalidInput("class_members: limit must be >= 2");
    std::vector<std::int64_t> out;
    if (id.i <= limit / 2) out.push_back(2 * id.i);
    if (id.i <= 62) {
        const std::int64_t p2 = std::int64_t{1} << id.i;
        // odd k: members p2 + 1, 3*p2 + 1, ... stride 2*p2
        for (std::int64_t v = p2 + 1; v <= limit; v += 2 * p2) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PartitionReport verify_partition(std::int64_t n, int jobs) {
    if (n < 2) throw InvalidInput("verify_partition: limit must be >= 2");
    if (jobs < 1) throw InvalidInput("verify_partition: worker count must be >= 1");
    PartitionReport rep;
    rep.limit = n;

    // (a) every m in [2, n] belongs to exactly one class, and that class
    // is the one class_index names. Candidate classes with any member
    // <= n have i <= n/2 (even member) or 2^i < n (odd members).
    const auto check_range = [&](std::int64_t lo, std::int64_t hi,
                                 std::vector<std::string>& out) {
        for (std::int64_t m = lo; m <= hi; ++m) {
            std::int64_t hits = 0, found = 0;
            if (m % 2 == 0) {
                if (in_class(m, m / 2)) {
                    ++hits;
                    found = m / 2;
                }
            } else {
                for (std::int64_t i = 1; (std::int64_t{1} << i) <= m - 1; ++i) {
                    if (in_class(m, i)) {
                        ++hits;
                        found = i;
                    }
                }
            }
            if (hits != 1)
                out.push_back(std::to_string(m) + " lies in " + std::to_string(hits) +
                              " classes");
            else if (ClassId{found} != class_index(m))
                out.push_back(std::to_string(m) + " classified as E_" +
                              std::to_string(class_index(m).i) + " but found in E_" +
                              std::to_string(found));
        }
    };
    if (jobs <= 1) {
        check_range(2, n, rep.violations);
    } else {
        std::vector<std::vector<std::string>> partial(static_cast<std::size_t>(jobs));
        std::vector<std::thread> pool;
        const std::int64_t span = (n - 1 + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                const std::int64_t lo = 2 + t * span;
                const std::int64_t hi = std::min(n, lo + span - 1);
                if (lo <= hi) check_range(lo, hi, partial[static_cast<std::size_t>(t)]);
            });
        for (std::thread& th : pool) th.join();
        for (auto& chunk : partial)
            rep.violations.insert(rep.violations.end(), chunk.begin(), chunk.end());
    }

    // (b) each class meeting [2, n] contains exactly one even member, 2i,
    // and the classes jointly cover the n-1 integers of the range.
    std::int64_t max_i = n / 2;
    for (std::int64_t i = max_i + 1; i <= 62 && (std::int64_t{1} << i) + 1 <= n; ++i)
        max_i = i;
    for (std::int64_t i = 1; i <= max_i; ++i) {
        const std::vector<std::int64_t> members = class_members(ClassId{i}, n);
        if (members.empty()) continue;
        ++rep.classes_checked;
        rep.members_seen += members.size();
        std::int64_t evens = 0;
        for (std::int64_t m : members)
            if (m % 2 == 0) {
                ++evens;
                if (m != 2 * i)
                    rep.violations.push_back("class E_" + std::to_string(i) +
                                             " has stray even member " + std::to_string(m));
            }
        if (evens > 1)
            rep.violations.push_back("class E_" + std::to_string(i) + " has " +
                                     std::to_string(evens) + " even members");
    }
    if (rep.members_seen != static_cast<std::uint64_t>(n - 1))
        rep.violations.push_back("classes cover " + std::to_string(rep.members_seen) +
                                 " integers, expected " + std::to_string(n - 1));
    return rep;
}

Rat evens_density(std::int64_t n) {
    if (n < 2) throw InvalidInput("evens_density: limit must be >= 2");
    return Rat(n / 2, n - 1);
}

} // namespace algdens
