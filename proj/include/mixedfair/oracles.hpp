#pragma once

#include <functional>

#include "mixedfair/allocation.hpp"
#include "mixedfair/instance.hpp"
#include "mixedfair/mechanisms.hpp"
#include "mixedfair/welfare.hpp"

namespace mixedfair {

struct OracleBudget {
    long long max_assignments = 1'000'000;
    int grid_denominator = 4;
};

// Visits every wasteless assignment (goods nobody values are disposed) in
// lexicographic owner order; stops early when the visitor returns false.
void for_each_wasteless_assignment(const Instance& inst,
                                   const std::function<bool(const AssignmentVector&)>& visit);

long long count_wasteless_assignments(const Instance& inst);

// Water-filling from a given start-up assignment; allocation only.
Allocation water_fill(const Instance& inst, const AssignmentVector& owner);

// Clause 1: all agents holding a positive fraction have equal utility.
// Clause 2: agents holding nothing divisible sit at or above that level.
bool check_water_filling_property(const Instance& inst, const Allocation& alloc);

// The water level: the common utility of agents with positive fractions,
// or the minimum utility when the divisible good went nowhere. Throws
// PreconditionError when the water-filling property does not hold.
Rational potential_phi(const Instance& inst, const Allocation& alloc);

// Enumerates all wasteless assignments, water-fills each, and returns the
// leximin-best outcome (ties resolved by lexicographic assignment order).
struct LeximinOracleResult {
    UtilityProfile profile;
    Allocation allocation;
};
LeximinOracleResult brute_leximin_mixed(const Instance& inst, const OracleBudget& budget = {});

// Exhaustive (count, product) argmax over wasteless assignments; ties
// resolved by lexicographic assignment order, mirroring mnw_tie_allocate.
struct MnwOracleResult {
    long long positive_count = 0;
    Rational product = 1;
    AssignmentVector assignment;
};
MnwOracleResult brute_mnw_indivisible(const Instance& inst, const OracleBudget& budget = {});

// All divisions of each live divisible good into multiples of
// 1/denominator across the agents; used for one-sided dominance checks.
void for_each_grid_division(const Instance& inst, const AssignmentVector& owner,
                            int denominator,
                            const std::function<bool(const Allocation&)>& visit);

} // namespace mixedfair
