#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>

#include "mixedfair/allocation.hpp"
#include "mixedfair/instance.hpp"
#include "mixedfair/mechanisms.hpp"

namespace mixedfair {

enum class MechanismId {
    mnw_tie,
    mnw_tie_no_disposal,
    mechanism1,
    mechanism2,
    mechanism3,
};

std::string_view mechanism_name(MechanismId id);
std::optional<MechanismId> mechanism_from_name(std::string_view name);

// Runs the identified mechanism and returns the allocation. mnw_tie and
// its no-disposal variant require m_bar = 0.
Allocation run_mechanism(MechanismId id, const Instance& inst);

// A strictly profitable misreport: the rows the agent submitted and the
// utilities of the resulting bundles under her true valuation.
struct Deviation {
    std::vector<Rational> reported_indivisible;
    std::vector<Rational> reported_divisible;
    Rational truthful_utility;
    Rational deviating_utility;
    Rational gain;
};

struct AuditReport {
    MechanismId mechanism = MechanismId::mnw_tie;
    int agent = 0;
    std::optional<Deviation> deviation;
    long long search_space_size = 0;
    bool exhaustive = false;
};

inline constexpr long long kDefaultAuditCap = 1 << 20;

// Runs the mechanism on the true profile and on every unilateral binary
// misreport of the given agent (indivisible rows only for mechanism1,
// whose divisible value u is public). Bundles are always scored with the
// agent's true valuation. Returns the highest-gain deviation, ties broken
// by lexicographically smallest report; or a no-deviation certificate.
// Throws BudgetError when the report space exceeds the cap.
AuditReport audit_truthfulness(MechanismId id, const Instance& inst, int agent,
                               long long cap = kDefaultAuditCap);

// ---------------------------------------------------------------------------
// Impossibility harness: two agents, one indivisible good both value 1,
// one divisible good valued a and b with b > a > 1. An allocation rule
// maps (a, b) to the fraction x of the divisible good that goes to agent 1
// (who must hold the indivisible good). EFM confines x to
// [(a-1)/(2a), (b-1)/(2b)], and no rule inside the interval is truthful.
// ---------------------------------------------------------------------------

enum class RuleViolation {
    efm_violation,
    deviation_agent1,
    deviation_agent2,
};

std::string_view rule_violation_name(RuleViolation violation);

struct RuleWitness {
    Rational a;
    Rational b;
    Rational x;
    RuleViolation violation = RuleViolation::efm_violation;
    Rational feasible_lo;
    Rational feasible_hi;
    std::optional<Rational> deviating_report;  // a' or b'
    std::optional<Rational> new_x;
    std::optional<Rational> gain;
};

using AllocationRule = std::function<Rational(const Rational& a, const Rational& b)>;

// Scans the sample pairs in order: reports an EFM violation when the rule
// leaves the feasible interval; otherwise searches the deviation grid for
// a profitable misreport (agent 1 raising a when x sits at the lower
// endpoint, agent 2 lowering b when x sits above it). Returns the first
// witness, or nullopt when the finite grids certify nothing.
std::optional<RuleWitness> impossibility_demo(
    const AllocationRule& rule,
    const std::vector<std::pair<Rational, Rational>>& samples,
    const std::vector<Rational>& deviations);

AllocationRule lower_endpoint_rule();
AllocationRule upper_endpoint_rule();
AllocationRule midpoint_rule();

// a, b drawn from {3/2, 2, 5/2, 3, 4} with b > a; deviations from the
// same value set.
std::vector<std::pair<Rational, Rational>> default_sample_grid();
std::vector<Rational> default_deviation_grid();

// ---------------------------------------------------------------------------
// Pinned demonstration instances.
// ---------------------------------------------------------------------------

// 3 agents, 5 indivisible goods, g4 valued only by agent 1. With disposal
// the MNW/leximin allocator is truthful here; without it, agent 1 profits
// by dropping her value on g4.
Instance free_disposal_fixture();

// 2 agents, 1 indivisible good, 2 divisible goods; the instance on which
// mechanism2 hands each agent "her" divisible good.
Instance two_agent_mixed_fixture();

// 4 agents, 5 indivisible goods, 1 divisible good; the instance showing
// that always returning an MNW/leximin allocation is manipulable.
Instance four_agent_manipulation_fixture();

// Exact Nash-welfare accounting on the 4-agent instance, before and after
// agent 2's misreport (dropping g1 and g5). `ok` requires every relation
// below to hold.
struct MnwManipulationReport {
    Rational single_good_upper_bound;   // 125/27: AM-GM bound when agent 1 holds one good
    Rational best_single_good_product;  // enumerated maximum under that restriction
    Rational mnw_product;               // 128/27: agent 1 holds two goods
    Rational best_overall_product;      // enumerated maximum, equals mnw_product
    Rational misreport_product;         // 9/2: maximum after the misreport
    Rational misreport_alt_agent1_pair; // 4: best when agent 1 keeps both goods
    Rational misreport_alt_triple;      // 3: best when one agent takes g1, g3 and g5
    Rational truthful_agent2_utility;   // 4/3 in every truthful optimum
    Rational misreport_agent2_utility;  // 3/2 (true value) in every post-misreport optimum
    bool ok = false;
};
MnwManipulationReport mnw_manipulation_report();

// The two-agent mixed-goods variant of the same effect, with the MNW rule
// pinned by closed-form case analysis: truthful utility 3/2, utility 2
// after reporting the two_agent_mixed_fixture table.
struct FixedRuleManipulation {
    Rational truthful_utility;
    Rational deviating_utility;
    Rational gain;
};
FixedRuleManipulation fixed_mnw_manipulation_fixture();

// ---------------------------------------------------------------------------
// Counterexample search for the naive multi-divisible rule.
// ---------------------------------------------------------------------------

struct MultiDivisibleSearchBounds {
    int max_agents = 3;
    int max_indivisible = 3;
    int divisible_count = 2;
};

struct MultiDivisibleCounterexample {
    Instance instance;
    Allocation allocation;
};

// Enumerates binary_all instances in lexicographic bit order and returns
// the first one whose mechanism3_naive_multi output violates EFM (weak
// variant), together with that output.
std::optional<MultiDivisibleCounterexample> find_naive_multi_counterexample(
    const MultiDivisibleSearchBounds& bounds = {});

// Enumerates every binary_all instance of the given shape in lexicographic
// bit order (indivisible matrix row-major first, then divisible); stops
// when the visitor returns false.
void for_each_binary_all_instance(int n, int m, int m_bar,
                                  const std::function<bool(const Instance&)>& visit);

} // namespace mixedfair
