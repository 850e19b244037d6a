#pragma once

#include <vector>

#include "mixedfair/instance.hpp"
#include "mixedfair/rational.hpp"

namespace mixedfair {

// One agent's bundle: a set of indivisible goods (sorted indices) plus a
// fraction of each divisible good.
struct Bundle {
    std::vector<int> indivisible;
    std::vector<Rational> fractions;

    bool operator==(const Bundle& other) const = default;
};

struct Allocation {
    std::vector<Bundle> bundles;            // one per agent
    std::vector<int> disposed_indivisible;  // sorted
    std::vector<int> disposed_divisible;    // sorted

    bool operator==(const Allocation& other) const = default;
};

// Throws ValidationError unless:
//  - bundles.size() == n, fraction vectors have length m_bar,
//  - the indivisible bundles plus disposed_indivisible partition [m],
//  - every fraction lies in [0,1],
//  - each divisible good's fractions sum to 1, or to 0 when disposed,
//  - disposed goods are valued 0 by every agent (free disposal).
void validate_allocation(const Instance& inst, const Allocation& alloc);

// Owner per indivisible good; kDisposed marks a discarded good.
inline constexpr int kDisposed = -1;
using AssignmentVector = std::vector<int>;

// Allocation with the given owners and all-zero fractions (divisible goods
// left unallocated; callers fill the fractions in afterwards).
Allocation allocation_from_assignment(const Instance& inst, const AssignmentVector& owner);

// Derives the owner vector back from the bundles.
AssignmentVector assignment_of(const Instance& inst, const Allocation& alloc);

// Drops the divisible part; pairs with Instance::indivisible_projection.
Allocation indivisible_projection(const Allocation& alloc);

} // namespace mixedfair
