#include "mixedfair/oracles.hpp"

#include <algorithm>

#include "mixedfair/errors.hpp"
#include "mixedfair/fairness.hpp"
#include "mixedfair/mnw_tie.hpp"

namespace mixedfair {

namespace {

std::vector<std::vector<int>> wasteless_candidates(const Instance& inst) {
    std::vector<std::vector<int>> candidates(inst.m());
    for (int g = 0; g < inst.m(); ++g) {
        for (int i = 0; i < inst.n(); ++i) {
            if (inst.indivisible_value(i, g) == 1) candidates[g].push_back(i);
        }
    }
    return candidates;
}

void require_identical_div(const Instance& inst, const char* what) {
    if (!inst.identical_divisible_value()) {
        throw ModeError(std::string(what) + " requires the identical divisible value u");
    }
}

} // namespace

void for_each_wasteless_assignment(const Instance& inst,
                                   const std::function<bool(const AssignmentVector&)>& visit) {
    const auto candidates = wasteless_candidates(inst);
    const int m = inst.m();
    AssignmentVector owner(m, kDisposed);

    // Odometer over the valued goods, last good fastest, so assignments
    // arrive in lexicographic owner order.
    std::vector<int> valued;
    for (int g = 0; g < m; ++g) {
        if (!candidates[g].empty()) valued.push_back(g);
    }
    std::vector<int> pick(valued.size(), 0);
    for (std::size_t k = 0; k < valued.size(); ++k) owner[valued[k]] = candidates[valued[k]][0];

    while (true) {
        if (!visit(owner)) return;
        int k = static_cast<int>(valued.size()) - 1;
        while (k >= 0) {
            const int g = valued[k];
            if (++pick[k] < static_cast<int>(candidates[g].size())) {
                owner[g] = candidates[g][pick[k]];
                break;
            }
            pick[k] = 0;
            owner[g] = candidates[g][0];
            --k;
        }
        if (k < 0) return;
    }
}

long long count_wasteless_assignments(const Instance& inst) {
    const auto candidates = wasteless_candidates(inst);
    long long count = 1;
    constexpr long long kLimit = 1LL << 60;
    for (const auto& c : candidates) {
        if (!c.empty()) {
            count *= static_cast<long long>(c.size());
            if (count > kLimit) return kLimit;
        }
    }
    return count;
}

Allocation water_fill(const Instance& inst, const AssignmentVector& owner) {
    require_identical_div(inst, "water_fill");
    return water_fill_from(inst, owner).allocation;
}

bool check_water_filling_property(const Instance& inst, const Allocation& alloc) {
    require_identical_div(inst, "check_water_filling_property");
    validate_allocation(inst, alloc);

    std::optional<Rational> level;
    std::vector<Rational> zero_fraction_utilities;
    for (int i = 0; i < inst.n(); ++i) {
        const Rational utility = value_of(inst, i, alloc.bundles[i]);
        if (alloc.bundles[i].fractions[0] > 0) {
            if (level && *level != utility) return false;
            level = utility;
        } else {
            zero_fraction_utilities.push_back(utility);
        }
    }
    if (!level) return true;
    for (const Rational& u : zero_fraction_utilities) {
        if (u < *level) return false;
    }
    return true;
}

Rational potential_phi(const Instance& inst, const Allocation& alloc) {
    if (!check_water_filling_property(inst, alloc)) {
        throw PreconditionError("potential_phi: allocation lacks the water-filling property");
    }
    std::optional<Rational> lowest;
    for (int i = 0; i < inst.n(); ++i) {
        if (alloc.bundles[i].fractions[0] > 0) {
            return value_of(inst, i, alloc.bundles[i]);
        }
        const Rational utility = value_of(inst, i, alloc.bundles[i]);
        if (!lowest || utility < *lowest) lowest = utility;
    }
    return *lowest;
}

LeximinOracleResult brute_leximin_mixed(const Instance& inst, const OracleBudget& budget) {
    require_identical_div(inst, "brute_leximin_mixed");
    if (count_wasteless_assignments(inst) > budget.max_assignments) {
        throw BudgetError("brute_leximin_mixed: assignment count exceeds the budget");
    }
    std::optional<LeximinOracleResult> best;
    for_each_wasteless_assignment(inst, [&](const AssignmentVector& owner) {
        Allocation alloc = water_fill(inst, owner);
        UtilityProfile profile = utility_profile(inst, alloc);
        if (!best || leximin_compare(profile, best->profile) == Ordering::greater) {
            best = LeximinOracleResult{std::move(profile), std::move(alloc)};
        }
        return true;
    });
    return *best;
}

MnwOracleResult brute_mnw_indivisible(const Instance& inst, const OracleBudget& budget) {
    if (count_wasteless_assignments(inst) > budget.max_assignments) {
        throw BudgetError("brute_mnw_indivisible: assignment count exceeds the budget");
    }
    std::optional<MnwOracleResult> best;
    for_each_wasteless_assignment(inst, [&](const AssignmentVector& owner) {
        const NashWelfare nw = nash_welfare_of(assignment_profile(inst, owner));
        if (!best || nash_less({best->positive_count, best->product}, nw)) {
            best = MnwOracleResult{nw.positive_count, nw.product, owner};
        }
        return true;
    });
    return *best;
}

void for_each_grid_division(const Instance& inst, const AssignmentVector& owner,
                            int denominator,
                            const std::function<bool(const Allocation&)>& visit) {
    if (denominator < 1) throw ValidationError("grid denominator must be positive");
    Allocation base = allocation_from_assignment(inst, owner);
    std::vector<int> live;
    for (int g = 0; g < inst.m_bar(); ++g) {
        if (inst.divisible_good_valued(g)) {
            live.push_back(g);
        } else {
            base.disposed_divisible.push_back(g);
        }
    }

    // Compositions of `denominator` units among the agents, per live good.
    const int n = inst.n();
    std::vector<std::vector<int>> units(live.size(), std::vector<int>(n, 0));
    for (auto& u : units) u[0] = denominator;

    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == live.size()) {
            Allocation alloc = base;
            for (std::size_t j = 0; j < live.size(); ++j) {
                for (int i = 0; i < n; ++i) {
                    alloc.bundles[i].fractions[live[j]] = Rational(units[j][i], denominator);
                }
            }
            return visit(alloc);
        }
        std::vector<int>& u = units[k];
        std::function<bool(int, int)> compose = [&](int agent, int left) -> bool {
            if (agent == n - 1) {
                u[agent] = left;
                return rec(k + 1);
            }
            for (int take = 0; take <= left; ++take) {
                u[agent] = take;
                if (!compose(agent + 1, left - take)) return false;
            }
            return true;
        };
        return compose(0, denominator);
    };
    rec(0);
}

} // namespace mixedfair
