#pragma once

#include "mixedfair/allocation.hpp"
#include "mixedfair/instance.hpp"

namespace mixedfair {

using UtilityProfile = std::vector<Rational>;

// (v_1(A_1), ..., v_n(A_n)) under the instance valuations.
UtilityProfile utility_profile(const Instance& inst, const Allocation& alloc);

// Nash welfare: first the number of agents with positive utility, then the
// product of those utilities. The empty product is 1.
struct NashWelfare {
    long long positive_count = 0;
    Rational product = 1;

    bool operator==(const NashWelfare& other) const = default;
};

NashWelfare nash_welfare(const Instance& inst, const Allocation& alloc);
NashWelfare nash_welfare_of(const UtilityProfile& profile);

// True when lhs is strictly worse: smaller count, or equal count and
// smaller product.
bool nash_less(const NashWelfare& lhs, const NashWelfare& rhs);

enum class Ordering { less, equal, greater };

// Compares ascending-sorted copies lexicographically. Throws
// ValidationError on length mismatch.
Ordering leximin_compare(const UtilityProfile& p, const UtilityProfile& q);

// True iff every prefix sum of p's ascending-sorted entries weakly exceeds
// q's. Throws ValidationError on length mismatch.
bool lorenz_dominates(const UtilityProfile& p, const UtilityProfile& q);

} // namespace mixedfair
