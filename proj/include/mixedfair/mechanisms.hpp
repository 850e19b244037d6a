#pragma once

#include <optional>

#include "mixedfair/allocation.hpp"
#include "mixedfair/instance.hpp"

namespace mixedfair {

// One round of the water-filling loop. `delta` is the utility gap to the
// second-lowest level; an empty optional means the gap is unbounded
// (every agent is already at the minimum). `remaining` is the amount of
// the divisible good left at the start of the round, and `increment` is
// min(delta/u, remaining/|T1|), added to each T1 agent's fraction.
struct WaterFillStep {
    std::vector<int> t1;
    std::vector<int> t2;
    std::optional<Rational> delta;
    Rational remaining;
    Rational increment;
};

struct WaterFillTrace {
    std::vector<WaterFillStep> iterations;
};

struct Mechanism2Trace {
    std::optional<int> i_star;      // lower-utility agent, set only on a strict gap
    std::optional<int> k_bar_star;  // divisible good handed to i_star, if one exists
};

struct Mechanism3Trace {
    std::vector<int> t;  // argmin set sharing the divisible good
};

struct Mechanism1Result {
    Allocation allocation;
    WaterFillTrace trace;
};

struct Mechanism2Result {
    Allocation allocation;
    Mechanism2Trace trace;
};

struct Mechanism3Result {
    Allocation allocation;
    Mechanism3Trace trace;
};

// Truthful EFM mechanism for binary indivisible values plus a single
// divisible good of identical value u: MNW/leximin assignment of the
// goods, then water-filling of the divisible good onto the current
// minimum-utility agents. Requires mode binary_ind_identical_div.
Mechanism1Result mechanism1(const Instance& inst);

// The water-filling loop alone, started from an arbitrary assignment
// (wasteful owners allowed; utilities follow the instance valuations).
// mechanism1 is water_fill_from(inst, mnw_tie_allocate(inst)).
Mechanism1Result water_fill_from(const Instance& inst, const AssignmentVector& owner);

// Truthful EFM mechanism for two agents with binary values on everything:
// MNW/leximin assignment, one whole divisible good to the poorer agent if
// it values one, every other divisible good split among the agents that
// value it. Requires mode binary_all and n = 2.
Mechanism2Result mechanism2(const Instance& inst);

// Truthful EFM mechanism for binary values and a single divisible good:
// MNW/leximin assignment, then the divisible good is shared equally by
// the agents with minimum utility -- including members that value it 0,
// exactly as specified. Requires mode binary_all and m_bar = 1. A
// divisible good nobody values is disposed and the mechanism reduces to
// the assignment step.
Mechanism3Result mechanism3(const Instance& inst);

// The same rule applied to every divisible good regardless of their
// number. Coincides with mechanism3 when m_bar = 1 and carries no
// fairness guarantee otherwise; exists to exhibit its failure.
Allocation mechanism3_naive_multi(const Instance& inst);

} // namespace mixedfair
