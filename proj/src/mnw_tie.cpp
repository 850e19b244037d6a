#include "mixedfair/mnw_tie.hpp"

#include <algorithm>
#include <numeric>

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

// Agents valuing each indivisible good at 1; empty list = disposable good.
std::vector<std::vector<int>> valuer_lists(const Instance& inst) {
    std::vector<std::vector<int>> valuers(inst.m());
    for (int g = 0; g < inst.m(); ++g) {
        for (int i = 0; i < inst.n(); ++i) {
            const Rational& v = inst.indivisible_value(i, g);
            if (v == 1) {
                valuers[g].push_back(i);
            } else if (v != 0) {
                throw ValidationError("allocator requires binary indivisible values");
            }
        }
    }
    return valuers;
}

// Can every agent i collect at least need[i] goods, one good per slot,
// drawing only from goods that list the agent? Kuhn augmenting paths over
// (agent, copy) slots; leftover goods still have a valuer to absorb them,
// so meeting all the demands is exactly floor feasibility.
class DemandMatcher {
public:
    explicit DemandMatcher(const std::vector<const std::vector<int>*>& goods) : goods_(goods) {}

    bool feasible(const std::vector<int>& need) {
        match_.assign(goods_.size(), -1);
        stamp_.assign(goods_.size(), -1);
        slot_agent_.clear();
        for (int i = 0; i < static_cast<int>(need.size()); ++i) {
            for (int c = 0; c < need[i]; ++c) slot_agent_.push_back(i);
        }
        if (slot_agent_.size() > goods_.size()) return false;
        for (int s = 0; s < static_cast<int>(slot_agent_.size()); ++s) {
            round_ = s;
            if (!augment(s)) return false;
        }
        return true;
    }

private:
    bool augment(int slot) {
        const int agent = slot_agent_[slot];
        for (int g = 0; g < static_cast<int>(goods_.size()); ++g) {
            if (stamp_[g] == round_) continue;
            const std::vector<int>& owners = *goods_[g];
            if (!std::binary_search(owners.begin(), owners.end(), agent)) continue;
            stamp_[g] = round_;
            if (match_[g] == -1 || augment(match_[g])) {
                match_[g] = slot;
                return true;
            }
        }
        return false;
    }

    const std::vector<const std::vector<int>*>& goods_;
    std::vector<int> match_;
    std::vector<int> stamp_;
    std::vector<int> slot_agent_;
    int round_ = 0;
};

// Leximin-optimal sorted utility vector over wasteless completions of the
// given goods, on top of per-agent committed counts. Floors rise one level
// at a time; when a level cannot be reached by everyone still active, the
// raisable agent sets form a matroid, so a greedy scan in index order
// keeps the largest one and the rest freeze at the previous level. Frozen
// agents always sit inside a tight set, so their value is exact in every
// remaining completion.
std::vector<long long> best_sorted_completion(
    const std::vector<const std::vector<int>*>& goods,
    const std::vector<long long>& committed) {
    const int n = static_cast<int>(committed.size());
    DemandMatcher matcher(goods);

    std::vector<long long> frozen(n, -1);
    std::vector<int> active(n);
    std::iota(active.begin(), active.end(), 0);
    long long level = 0;

    std::vector<int> need(n);
    auto feasible = [&](const std::vector<long long>& floors) {
        for (int i = 0; i < n; ++i) {
            need[i] = static_cast<int>(std::max<long long>(0, floors[i] - committed[i]));
        }
        return matcher.feasible(need);
    };

    std::vector<long long> floors(n, 0);
    while (!active.empty()) {
        for (int i : active) floors[i] = level + 1;
        if (feasible(floors)) {
            ++level;
            continue;
        }
        std::vector<int> keep;
        for (int i : active) floors[i] = level;
        for (int i : active) {
            floors[i] = level + 1;
            if (feasible(floors)) {
                keep.push_back(i);
            } else {
                floors[i] = level;
            }
        }
        for (int i : active) {
            if (!std::binary_search(keep.begin(), keep.end(), i)) frozen[i] = level;
        }
        active = std::move(keep);
        ++level;
    }

    std::sort(frozen.begin(), frozen.end());
    return frozen;
}

std::vector<const std::vector<int>*> valued_good_views(
    const std::vector<std::vector<int>>& valuers, int from) {
    std::vector<const std::vector<int>*> views;
    for (int g = from; g < static_cast<int>(valuers.size()); ++g) {
        if (!valuers[g].empty()) views.push_back(&valuers[g]);
    }
    return views;
}

AssignmentVector allocate_with_tie_breaking(const Instance& inst, bool dispose_worthless) {
    const auto valuers = valuer_lists(inst);
    const int n = inst.n();
    const int m = inst.m();

    std::vector<long long> committed(n, 0);
    const std::vector<long long> target =
        best_sorted_completion(valued_good_views(valuers, 0), committed);

    AssignmentVector owner(m, kDisposed);
    for (int g = 0; g < m; ++g) {
        if (valuers[g].empty()) {
            if (!dispose_worthless) owner[g] = 0;
            continue;
        }
        const auto rest = valued_good_views(valuers, g + 1);
        bool placed = false;
        for (int a : valuers[g]) {
            ++committed[a];
            if (best_sorted_completion(rest, committed) == target) {
                owner[g] = a;
                placed = true;
                break;
            }
            --committed[a];
        }
        if (!placed) {
            throw Error("internal: no owner keeps the leximin profile reachable");
        }
    }
    return owner;
}

} // namespace

UtilityProfile leximin_profile(const Instance& inst) {
    const auto valuers = valuer_lists(inst);
    const std::vector<long long> committed(inst.n(), 0);
    const auto sorted = best_sorted_completion(valued_good_views(valuers, 0), committed);
    UtilityProfile profile;
    profile.reserve(sorted.size());
    for (long long v : sorted) profile.push_back(Rational(v));
    return profile;
}

AssignmentVector mnw_tie_allocate(const Instance& inst) {
    return allocate_with_tie_breaking(inst, /*dispose_worthless=*/true);
}

AssignmentVector mnw_tie_allocate_no_disposal(const Instance& inst) {
    return allocate_with_tie_breaking(inst, /*dispose_worthless=*/false);
}

bool is_wasteless(const Instance& inst, const AssignmentVector& owner) {
    if (static_cast<int>(owner.size()) != inst.m()) return false;
    for (int g = 0; g < inst.m(); ++g) {
        if (owner[g] == kDisposed) {
            if (inst.indivisible_good_valued(g)) return false;
        } else if (inst.indivisible_value(owner[g], g) != 1) {
            return false;
        }
    }
    return true;
}

UtilityProfile assignment_profile(const Instance& inst, const AssignmentVector& owner) {
    UtilityProfile profile(inst.n(), Rational(0));
    for (int g = 0; g < inst.m(); ++g) {
        if (owner[g] != kDisposed) {
            profile[owner[g]] += inst.indivisible_value(owner[g], g);
        }
    }
    return profile;
}

} // namespace mixedfair
