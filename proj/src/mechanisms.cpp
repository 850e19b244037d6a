#include "mixedfair/mechanisms.hpp"

#include <algorithm>

#include "mixedfair/errors.hpp"
#include "mixedfair/fairness.hpp"
#include "mixedfair/mnw_tie.hpp"

namespace mixedfair {

namespace {

void require_mode(const Instance& inst, Mode mode, const char* mechanism) {
    if (inst.mode() != mode) {
        throw ModeError(std::string(mechanism) + " requires mode " +
                        std::string(mode_name(mode)) + ", got " +
                        std::string(mode_name(inst.mode())));
    }
}

std::vector<int> disposable_divisible_goods(const Instance& inst) {
    std::vector<int> disposed;
    for (int g = 0; g < inst.m_bar(); ++g) {
        if (!inst.divisible_good_valued(g)) disposed.push_back(g);
    }
    return disposed;
}

// Agents whose current utility is minimal.
std::vector<int> argmin_agents(const std::vector<Rational>& utilities) {
    Rational lowest = utilities[0];
    for (const Rational& u : utilities) lowest = std::min(lowest, u);
    std::vector<int> agents;
    for (int i = 0; i < static_cast<int>(utilities.size()); ++i) {
        if (utilities[i] == lowest) agents.push_back(i);
    }
    return agents;
}

} // namespace

Mechanism1Result water_fill_from(const Instance& inst, const AssignmentVector& owner) {
    require_mode(inst, Mode::binary_ind_identical_div, "water filling");
    const Rational u = *inst.identical_divisible_value();
    const int n = inst.n();

    Mechanism1Result result;
    result.allocation = allocation_from_assignment(inst, owner);
    Allocation& alloc = result.allocation;

    std::vector<Rational> utilities(n);
    for (int i = 0; i < n; ++i) utilities[i] = value_of(inst, i, alloc.bundles[i]);

    Rational y = 1;
    while (y > 0) {
        WaterFillStep step;
        step.remaining = y;
        step.t1 = argmin_agents(utilities);
        if (static_cast<int>(step.t1.size()) != n) {
            Rational second;
            bool found = false;
            for (int i = 0; i < n; ++i) {
                if (std::binary_search(step.t1.begin(), step.t1.end(), i)) continue;
                if (!found || utilities[i] < second) {
                    second = utilities[i];
                    found = true;
                }
            }
            for (int i = 0; i < n; ++i) {
                if (utilities[i] == second) step.t2.push_back(i);
            }
            step.delta = second - utilities[step.t1.front()];
        }

        const Rational share = y / static_cast<int>(step.t1.size());
        step.increment = step.delta ? std::min(*step.delta / u, share) : share;
        for (int i : step.t1) {
            alloc.bundles[i].fractions[0] += step.increment;
            utilities[i] += step.increment * u;
        }
        result.trace.iterations.push_back(step);

        y = 1;
        for (int i = 0; i < n; ++i) y -= alloc.bundles[i].fractions[0];
    }

    validate_allocation(inst, alloc);
    return result;
}

Mechanism1Result mechanism1(const Instance& inst) {
    require_mode(inst, Mode::binary_ind_identical_div, "mechanism1");
    return water_fill_from(inst, mnw_tie_allocate(inst));
}

Mechanism2Result mechanism2(const Instance& inst) {
    require_mode(inst, Mode::binary_all, "mechanism2");
    if (inst.n() != 2) throw ModeError("mechanism2 requires exactly two agents");

    Mechanism2Result result;
    result.allocation = allocation_from_assignment(inst, mnw_tie_allocate(inst));
    Allocation& alloc = result.allocation;
    Mechanism2Trace& trace = result.trace;

    const Rational u1 = value_of_goods(inst, 0, alloc.bundles[0].indivisible);
    const Rational u2 = value_of_goods(inst, 1, alloc.bundles[1].indivisible);
    if (u1 != u2) {
        trace.i_star = u1 < u2 ? 0 : 1;
        for (int g = 0; g < inst.m_bar(); ++g) {
            if (inst.divisible_value(*trace.i_star, g) == 1) {
                trace.k_bar_star = g;
                alloc.bundles[*trace.i_star].fractions[g] = 1;
                break;
            }
        }
    }

    for (int g = 0; g < inst.m_bar(); ++g) {
        if (trace.k_bar_star && *trace.k_bar_star == g) continue;
        const bool first = inst.divisible_value(0, g) == 1;
        const bool second = inst.divisible_value(1, g) == 1;
        if (first && second) {
            alloc.bundles[0].fractions[g] = Rational(1, 2);
            alloc.bundles[1].fractions[g] = Rational(1, 2);
        } else if (first) {
            alloc.bundles[0].fractions[g] = 1;
        } else if (second) {
            alloc.bundles[1].fractions[g] = 1;
        } else {
            alloc.disposed_divisible.push_back(g);
        }
    }

    validate_allocation(inst, alloc);
    return result;
}

Mechanism3Result mechanism3(const Instance& inst) {
    require_mode(inst, Mode::binary_all, "mechanism3");
    if (inst.m_bar() != 1) throw ModeError("mechanism3 requires exactly one divisible good");

    Mechanism3Result result;
    result.allocation = allocation_from_assignment(inst, mnw_tie_allocate(inst));
    Allocation& alloc = result.allocation;

    std::vector<Rational> utilities(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        utilities[i] = value_of_goods(inst, i, alloc.bundles[i].indivisible);
    }
    result.trace.t = argmin_agents(utilities);

    if (!inst.divisible_good_valued(0)) {
        alloc.disposed_divisible.push_back(0);
    } else {
        const Rational share(1, static_cast<int>(result.trace.t.size()));
        for (int i : result.trace.t) alloc.bundles[i].fractions[0] = share;
    }

    validate_allocation(inst, alloc);
    return result;
}

Allocation mechanism3_naive_multi(const Instance& inst) {
    require_mode(inst, Mode::binary_all, "mechanism3_naive_multi");

    Allocation alloc = allocation_from_assignment(inst, mnw_tie_allocate(inst));
    std::vector<Rational> utilities(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        utilities[i] = value_of_goods(inst, i, alloc.bundles[i].indivisible);
    }
    const std::vector<int> t = argmin_agents(utilities);
    const Rational share(1, static_cast<int>(t.size()));

    alloc.disposed_divisible = disposable_divisible_goods(inst);
    for (int g = 0; g < inst.m_bar(); ++g) {
        if (std::binary_search(alloc.disposed_divisible.begin(),
                               alloc.disposed_divisible.end(), g)) {
            continue;
        }
        for (int i : t) alloc.bundles[i].fractions[g] = share;
    }

    validate_allocation(inst, alloc);
    return alloc;
}

} // namespace mixedfair
