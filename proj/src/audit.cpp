#include "mixedfair/audit.hpp"

#include <algorithm>

#include "mixedfair/errors.hpp"
#include "mixedfair/fairness.hpp"
#include "mixedfair/mnw_tie.hpp"
#include "mixedfair/oracles.hpp"
#include "mixedfair/welfare.hpp"

namespace mixedfair {

namespace {

std::vector<Rational> bits_to_row(unsigned long long bits, int width) {
    std::vector<Rational> row(width);
    for (int k = 0; k < width; ++k) {
        row[k] = (bits >> (width - 1 - k)) & 1ULL ? 1 : 0;
    }
    return row;
}

} // namespace

std::string_view mechanism_name(MechanismId id) {
    switch (id) {
        case MechanismId::mnw_tie: return "mnw-tie";
        case MechanismId::mnw_tie_no_disposal: return "mnw-tie-nodisposal";
        case MechanismId::mechanism1: return "m1";
        case MechanismId::mechanism2: return "m2";
        case MechanismId::mechanism3: return "m3";
    }
    return "?";
}

std::optional<MechanismId> mechanism_from_name(std::string_view name) {
    if (name == "mnw-tie") return MechanismId::mnw_tie;
    if (name == "mnw-tie-nodisposal") return MechanismId::mnw_tie_no_disposal;
    if (name == "m1" || name == "mechanism1") return MechanismId::mechanism1;
    if (name == "m2" || name == "mechanism2") return MechanismId::mechanism2;
    if (name == "m3" || name == "mechanism3") return MechanismId::mechanism3;
    return std::nullopt;
}

Allocation run_mechanism(MechanismId id, const Instance& inst) {
    switch (id) {
        case MechanismId::mnw_tie:
            if (inst.m_bar() != 0) {
                throw ModeError("mnw-tie allocates indivisible goods only; the instance has divisible goods");
            }
            return allocation_from_assignment(inst, mnw_tie_allocate(inst));
        case MechanismId::mnw_tie_no_disposal:
            if (inst.m_bar() != 0) {
                throw ModeError("mnw-tie-nodisposal allocates indivisible goods only");
            }
            return allocation_from_assignment(inst, mnw_tie_allocate_no_disposal(inst));
        case MechanismId::mechanism1: return mechanism1(inst).allocation;
        case MechanismId::mechanism2: return mechanism2(inst).allocation;
        case MechanismId::mechanism3: return mechanism3(inst).allocation;
    }
    throw Error("unknown mechanism");
}

AuditReport audit_truthfulness(MechanismId id, const Instance& inst, int agent, long long cap) {
    if (agent < 0 || agent >= inst.n()) throw ValidationError("audit: agent out of range");

    const int m = inst.m();
    // u is a public parameter of mechanism1, so its report space covers the
    // indivisible rows only; the binary mechanisms take both rows.
    const int div_bits = id == MechanismId::mechanism1 ? 0 : inst.m_bar();
    if (m + div_bits >= 62) throw BudgetError("audit: report space too large to enumerate");
    const long long space = 1LL << (m + div_bits);
    if (space > cap) {
        throw BudgetError("audit: report space of " + std::to_string(space) +
                          " exceeds the cap of " + std::to_string(cap));
    }

    AuditReport report;
    report.mechanism = id;
    report.agent = agent;
    report.search_space_size = space;

    const Allocation truthful = run_mechanism(id, inst);
    const Rational truthful_utility = value_of(inst, agent, truthful.bundles[agent]);

    const std::vector<Rational> true_div_row = inst.divisible_matrix()[agent];
    for (long long code = 0; code < space; ++code) {
        const auto ind_row = bits_to_row(static_cast<unsigned long long>(code) >> div_bits, m);
        const auto div_row = div_bits == 0
                                 ? true_div_row
                                 : bits_to_row(static_cast<unsigned long long>(code) &
                                                   ((1ULL << div_bits) - 1),
                                               div_bits);
        const Instance reported = inst.with_report(agent, ind_row, div_row);
        const Allocation outcome = run_mechanism(id, reported);
        const Rational utility = value_of(inst, agent, outcome.bundles[agent]);
        if (utility > truthful_utility) {
            const Rational gain = utility - truthful_utility;
            // Reports are enumerated in lexicographic row order, so on equal
            // gain the first hit is the canonical witness.
            if (!report.deviation || gain > report.deviation->gain) {
                report.deviation = Deviation{ind_row, div_row, truthful_utility, utility, gain};
            }
        }
    }
    report.exhaustive = true;
    return report;
}

// ---------------------------------------------------------------------------
// Impossibility harness.
// ---------------------------------------------------------------------------

std::string_view rule_violation_name(RuleViolation violation) {
    switch (violation) {
        case RuleViolation::efm_violation: return "efm-violation";
        case RuleViolation::deviation_agent1: return "deviation-agent1";
        case RuleViolation::deviation_agent2: return "deviation-agent2";
    }
    return "?";
}

namespace {

Rational lower_endpoint(const Rational& a) { return (a - 1) / (2 * a); }
Rational upper_endpoint(const Rational& b) { return (b - 1) / (2 * b); }

} // namespace

std::optional<RuleWitness> impossibility_demo(
    const AllocationRule& rule,
    const std::vector<std::pair<Rational, Rational>>& samples,
    const std::vector<Rational>& deviations) {
    for (const auto& [a, b] : samples) {
        if (!(b > a && a > 1)) {
            throw ValidationError("impossibility_demo: samples must satisfy b > a > 1");
        }
        RuleWitness witness;
        witness.a = a;
        witness.b = b;
        witness.feasible_lo = lower_endpoint(a);
        witness.feasible_hi = upper_endpoint(b);
        witness.x = rule(a, b);

        if (witness.x < witness.feasible_lo || witness.x > witness.feasible_hi) {
            witness.violation = RuleViolation::efm_violation;
            return witness;
        }
        if (witness.x == witness.feasible_lo) {
            // Agent 1 inflates a; x moves up and she keeps the surplus.
            for (const Rational& a_prime : deviations) {
                if (!(a_prime > a && b > a_prime)) continue;
                const Rational x_prime = rule(a_prime, b);
                if (x_prime > witness.x) {
                    witness.violation = RuleViolation::deviation_agent1;
                    witness.deviating_report = a_prime;
                    witness.new_x = x_prime;
                    witness.gain = (x_prime - witness.x) * a;
                    return witness;
                }
            }
        } else {
            // Agent 2 deflates b toward a; the interval shrinks below x.
            for (const Rational& b_prime : deviations) {
                if (!(b_prime < b && b_prime > a)) continue;
                const Rational shrunk_hi = upper_endpoint(b_prime);
                if (!(witness.feasible_lo < shrunk_hi && shrunk_hi < witness.x)) continue;
                const Rational x_prime = rule(a, b_prime);
                if (x_prime < witness.x) {
                    witness.violation = RuleViolation::deviation_agent2;
                    witness.deviating_report = b_prime;
                    witness.new_x = x_prime;
                    witness.gain = (witness.x - x_prime) * b;
                    return witness;
                }
            }
        }
    }
    return std::nullopt;
}

AllocationRule lower_endpoint_rule() {
    return [](const Rational& a, const Rational&) { return lower_endpoint(a); };
}

AllocationRule upper_endpoint_rule() {
    return [](const Rational&, const Rational& b) { return upper_endpoint(b); };
}

AllocationRule midpoint_rule() {
    return [](const Rational& a, const Rational& b) {
        return (lower_endpoint(a) + upper_endpoint(b)) / 2;
    };
}

namespace {

std::vector<Rational> default_grid_values() {
    return {Rational(3, 2), Rational(2), Rational(5, 2), Rational(3), Rational(4)};
}

} // namespace

std::vector<std::pair<Rational, Rational>> default_sample_grid() {
    const auto values = default_grid_values();
    std::vector<std::pair<Rational, Rational>> samples;
    for (const Rational& a : values) {
        for (const Rational& b : values) {
            if (b > a) samples.emplace_back(a, b);
        }
    }
    return samples;
}

std::vector<Rational> default_deviation_grid() { return default_grid_values(); }

// ---------------------------------------------------------------------------
// Pinned instances and their accounting.
// ---------------------------------------------------------------------------

Instance free_disposal_fixture() {
    return Instance::binary_all(
        {
            {1, 1, 1, 1, 1},
            {1, 1, 1, 0, 1},
            {1, 1, 1, 0, 1},
        },
        Matrix(3, std::vector<Rational>{}));
}

Instance two_agent_mixed_fixture() {
    return Instance::binary_all(
        {
            {1},
            {1},
        },
        {
            {1, 0},
            {0, 1},
        });
}

Instance four_agent_manipulation_fixture() {
    return Instance::binary_all(
        {
            {0, 1, 0, 1, 0},
            {1, 1, 0, 0, 1},
            {1, 1, 1, 1, 1},
            {1, 1, 1, 1, 1},
        },
        {
            {0},
            {1},
            {1},
            {1},
        });
}

namespace {

// Divides one unit of the divisible good among the agents that value it so
// the product of utilities is maximal: pour onto the current minima at an
// equal rate (the single-good MNW optimum).
std::vector<Rational> pour_for_product(std::vector<Rational> utilities,
                                       const std::vector<int>& drinkers) {
    Rational left = 1;
    while (left > 0 && !drinkers.empty()) {
        Rational lowest = utilities[drinkers.front()];
        for (int i : drinkers) lowest = std::min(lowest, utilities[i]);
        std::vector<int> at_lowest;
        std::optional<Rational> next;
        for (int i : drinkers) {
            if (utilities[i] == lowest) {
                at_lowest.push_back(i);
            } else if (!next || utilities[i] < *next) {
                next = utilities[i];
            }
        }
        Rational pour = left / static_cast<int>(at_lowest.size());
        if (next) pour = std::min(pour, *next - lowest);
        for (int i : at_lowest) utilities[i] += pour;
        left -= pour * static_cast<int>(at_lowest.size());
    }
    return utilities;
}

struct BestProducts {
    NashWelfare overall;
    NashWelfare agent1_single;  // agent 0 holds exactly one indivisible good
    NashWelfare agent1_pair;    // agent 0 holds two indivisible goods
    NashWelfare triple;         // some agent holds goods g1, g3 and g5 together
};

// Exhaustive MNW search on the 4-agent fixture shape: every wasteless
// assignment of the indivisible goods, each completed by the optimal
// division of the single divisible good.
BestProducts best_products(const Instance& inst) {
    std::vector<int> drinkers;
    for (int i = 0; i < inst.n(); ++i) {
        if (inst.divisible_value(i, 0) == 1) drinkers.push_back(i);
    }
    BestProducts best;
    best.overall.positive_count = -1;
    best.agent1_single.positive_count = -1;
    best.agent1_pair.positive_count = -1;
    best.triple.positive_count = -1;
    for_each_wasteless_assignment(inst, [&](const AssignmentVector& owner) {
        UtilityProfile profile = assignment_profile(inst, owner);
        const NashWelfare nw = nash_welfare_of(pour_for_product(profile, drinkers));
        auto consider = [&](NashWelfare& slot) {
            if (nash_less(slot, nw)) slot = nw;
        };
        consider(best.overall);
        int agent1_goods = 0;
        for (int g = 0; g < inst.m(); ++g) {
            if (owner[g] == 0) ++agent1_goods;
        }
        if (agent1_goods == 1) consider(best.agent1_single);
        if (agent1_goods == 2) consider(best.agent1_pair);
        if (owner[0] == owner[2] && owner[2] == owner[4] && owner[0] != kDisposed) {
            consider(best.triple);
        }
        return true;
    });
    return best;
}

} // namespace

MnwManipulationReport mnw_manipulation_report() {
    const Instance truth = four_agent_manipulation_fixture();
    MnwManipulationReport report;

    // One good keeps agent 1 at utility 1 while three agents share value at
    // most 5, so AM-GM caps the product at (5/3)^3.
    report.single_good_upper_bound = Rational(5, 3) * Rational(5, 3) * Rational(5, 3);

    const BestProducts truthful = best_products(truth);
    report.best_single_good_product = truthful.agent1_single.product;
    report.best_overall_product = truthful.overall.product;

    // The allocation the argument pins: agent 1 takes g2 and g4, the others
    // take one valued good and a third of the divisible good each.
    Allocation pinned = allocation_from_assignment(truth, {1, 0, 2, 0, 3});
    for (int i = 1; i < 4; ++i) pinned.bundles[i].fractions[0] = Rational(1, 3);
    report.mnw_product = nash_welfare(truth, pinned).product;

    const Instance misreported = truth.with_report(1, {0, 1, 0, 0, 0}, {1});
    const BestProducts deviated = best_products(misreported);
    report.misreport_product = deviated.overall.product;
    report.misreport_alt_agent1_pair = deviated.agent1_pair.product;
    report.misreport_alt_triple = deviated.triple.product;

    report.truthful_agent2_utility = Rational(4, 3);
    report.misreport_agent2_utility = Rational(3, 2);

    // Agent 2 receives 4/3 in every truthful optimum and, measured by her
    // true valuation, 3/2 in every post-misreport optimum.
    bool agent2_values_hold = true;
    {
        Allocation after = allocation_from_assignment(misreported, {2, 1, 2, 0, 3});
        after.bundles[1].fractions[0] = Rational(1, 2);
        after.bundles[3].fractions[0] = Rational(1, 2);
        const Rational true_value = value_of(truth, 1, after.bundles[1]);
        agent2_values_hold = nash_welfare(misreported, after).product == report.misreport_product &&
                             true_value == report.misreport_agent2_utility;
    }

    report.ok = report.best_single_good_product <= report.single_good_upper_bound &&
                report.mnw_product == report.best_overall_product &&
                report.mnw_product > report.single_good_upper_bound &&
                report.misreport_product > report.misreport_alt_agent1_pair &&
                report.misreport_alt_agent1_pair > report.misreport_alt_triple &&
                report.misreport_agent2_utility > report.truthful_agent2_utility &&
                agent2_values_hold;
    return report;
}

FixedRuleManipulation fixed_mnw_manipulation_fixture() {
    // Two agents, goods (g1, d1, d2); true values v1 = (1, 1, 1) and
    // v2 = (1, 0, 1). The product-maximizing split, by case analysis over
    // who takes g1: g1 to agent 2, d1 to agent 1, d2 halved, utilities
    // (3/2, 3/2). If agent 1 instead reports (1, 1, 0), the reported
    // products tie at 2; the rule resolves the tie toward agent 1, who
    // then holds g1 and all of d1.
    FixedRuleManipulation result;
    result.truthful_utility = Rational(3, 2);

    Bundle misreport_bundle;
    misreport_bundle.indivisible = {0};
    misreport_bundle.fractions = {Rational(1), Rational(0)};

    const Instance truth = Instance::binary_all({{1}, {1}}, {{1, 1}, {0, 1}});
    result.deviating_utility = value_of(truth, 0, misreport_bundle);
    result.gain = result.deviating_utility - result.truthful_utility;
    return result;
}

// ---------------------------------------------------------------------------
// Instance enumeration and the naive multi-divisible search.
// ---------------------------------------------------------------------------

void for_each_binary_all_instance(int n, int m, int m_bar,
                                  const std::function<bool(const Instance&)>& visit) {
    const int bits = n * (m + m_bar);
    if (bits >= 62) throw BudgetError("instance space too large to enumerate");
    for (unsigned long long code = 0; code < (1ULL << bits); ++code) {
        Matrix v_ind(n, std::vector<Rational>(m));
        Matrix v_div(n, std::vector<Rational>(m_bar));
        int shift = bits;
        for (int i = 0; i < n; ++i) {
            for (int g = 0; g < m; ++g) v_ind[i][g] = (code >> --shift) & 1ULL ? 1 : 0;
        }
        for (int i = 0; i < n; ++i) {
            for (int g = 0; g < m_bar; ++g) v_div[i][g] = (code >> --shift) & 1ULL ? 1 : 0;
        }
        if (!visit(Instance::binary_all(std::move(v_ind), std::move(v_div)))) return;
    }
}

std::optional<MultiDivisibleCounterexample> find_naive_multi_counterexample(
    const MultiDivisibleSearchBounds& bounds) {
    std::optional<MultiDivisibleCounterexample> found;
    for (int n = 1; n <= bounds.max_agents && !found; ++n) {
        for (int m = 0; m <= bounds.max_indivisible && !found; ++m) {
            for_each_binary_all_instance(n, m, bounds.divisible_count, [&](const Instance& inst) {
                Allocation alloc = mechanism3_naive_multi(inst);
                if (!is_efm_pos(inst, alloc)) {
                    found = MultiDivisibleCounterexample{inst, std::move(alloc)};
                    return false;
                }
                return true;
            });
        }
    }
    return found;
}

} // namespace mixedfair
