#pragma once

#include "mixedfair/allocation.hpp"
#include "mixedfair/instance.hpp"
#include "mixedfair/welfare.hpp"

namespace mixedfair {

// The leximin-optimal utility profile over wasteless assignments of the
// indivisible goods, returned in ascending order. Divisible goods are
// ignored. Computed by iterative feasibility: floors are raised level by
// level, and at each level the largest raisable agent set is kept (a
// matroid, so a greedy scan in index order finds it); whether a floor
// vector is achievable is a bipartite flow check.
//
// Requires binary indivisible values; throws ValidationError otherwise.
UtilityProfile leximin_profile(const Instance& inst);

// Deterministic MNW/leximin allocator for binary indivisible goods.
//
// Among all wasteless assignments achieving the leximin-optimal profile,
// returns the lexicographically smallest owner vector (owners compared
// good by good, lower agent index first). Goods nobody values are
// disposed. The output is simultaneously MNW, leximin and Lorenz
// dominating; truthfulness of the tie-breaking rule is established by the
// exhaustive audits, not assumed.
AssignmentVector mnw_tie_allocate(const Instance& inst);

// Variant without free disposal: goods nobody values go to agent 0 (the
// lexicographically smallest choice) instead of being discarded. This
// variant is manipulable; it exists so the audits can demonstrate the
// misreport that disposal prevents.
AssignmentVector mnw_tie_allocate_no_disposal(const Instance& inst);

// Every assigned good is valued 1 by its owner, every valued good is
// assigned, and disposed goods are valued by nobody.
bool is_wasteless(const Instance& inst, const AssignmentVector& owner);

// Per-agent utilities |G_i| induced by an assignment, under the instance's
// indivisible values (wasteful owners contribute 0).
UtilityProfile assignment_profile(const Instance& inst, const AssignmentVector& owner);

} // namespace mixedfair
