#pragma once

#include "qslab/series.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qslab {

// weakly decreasing sequence of positive parts
using Partition = std::vector<long>;

/* Visits every partition of n exactly once, in reverse-lexicographic order
 * ([n] first, all-ones last); n = 0 yields the empty partition. The callback
 * returns false to stop early. */
void for_each_partition(long n, const std::function<bool(const Partition&)>& visit);

// materialized list; meant for small n
std::vector<Partition> partitions_of(long n);

/* A decidable predicate selecting one of the partition families. The even-
 * largest-part families (dee, deeGeq) deliberately bound the multiplicity of
 * the largest part — dee admits at most two copies, deeGeq:k exactly k or
 * k+1 — which is the family their generating functions enumerate. */
struct PartitionConstraint {
    enum class Tag {
        Reg,       // no part divisible by t
        Ped,       // even parts pairwise distinct
        DE1,       // even parts distinct, largest part odd
        DE2,       // DE1 and largest part repeated (multiplicity >= 2)
        DE3,       // DE1 and largest part unrepeated (multiplicity = 1)
        DEGeq,     // even parts distinct, largest odd, multiplicity >= k
        DEExact,   // even parts distinct, largest odd, multiplicity = k
        DEe,       // largest part even with <= 2 copies, smaller evens distinct
        DEeExact,  // largest part even with exactly k copies, smaller evens distinct
        DEeGeq,    // largest part even with k or k+1 copies, smaller evens distinct
        Reg4Gt1,   // 4-regular with every part > 1
    };

    Tag tag = Tag::Reg;
    long param = 0;  // t for Reg, k for the parameterized families

    // CLI syntax: "reg:4", "ped", "de1", "de2", "de3", "deGeq:3", "deExact:2",
    // "dee", "deeExact:1", "deeGeq:2", "reg4gt1"
    static PartitionConstraint parse(const std::string& text);
    std::string str() const;

    bool matches(const Partition& p) const;

    // name of the registry series with the same counting sequence
    std::string registry_name() const;
};

// number of partitions of n satisfying c
long long count(long n, const PartitionConstraint& c);

// series whose n-th coefficient is count(n, c); practical bound order <= 60
Series oracle_series(const PartitionConstraint& c, long order);

// every constraint family the oracle knows, with multiplicity parameters 1..k_max
std::vector<PartitionConstraint> all_constraints(long k_max = 4);

}  // namespace qslab
