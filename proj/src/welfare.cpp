#include "mixedfair/welfare.hpp"

#include <algorithm>

#include "mixedfair/errors.hpp"
#include "mixedfair/fairness.hpp"

namespace mixedfair {

UtilityProfile utility_profile(const Instance& inst, const Allocation& alloc) {
    UtilityProfile profile;
    profile.reserve(inst.n());
    for (int i = 0; i < inst.n(); ++i) {
        profile.push_back(value_of(inst, i, alloc.bundles[i]));
    }
    return profile;
}

NashWelfare nash_welfare_of(const UtilityProfile& profile) {
    NashWelfare nw;
    for (const Rational& u : profile) {
        if (u > 0) {
            ++nw.positive_count;
            nw.product *= u;
        }
    }
    return nw;
}

NashWelfare nash_welfare(const Instance& inst, const Allocation& alloc) {
    validate_allocation(inst, alloc);
    return nash_welfare_of(utility_profile(inst, alloc));
}

bool nash_less(const NashWelfare& lhs, const NashWelfare& rhs) {
    if (lhs.positive_count != rhs.positive_count) {
        return lhs.positive_count < rhs.positive_count;
    }
    return lhs.product < rhs.product;
}

Ordering leximin_compare(const UtilityProfile& p, const UtilityProfile& q) {
    if (p.size() != q.size()) {
        throw ValidationError("leximin_compare: profiles must have equal length");
    }
    UtilityProfile ps = p;
    UtilityProfile qs = q;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    for (std::size_t k = 0; k < ps.size(); ++k) {
        if (ps[k] < qs[k]) return Ordering::less;
        if (ps[k] > qs[k]) return Ordering::greater;
    }
    return Ordering::equal;
}

bool lorenz_dominates(const UtilityProfile& p, const UtilityProfile& q) {
    if (p.size() != q.size()) {
        throw ValidationError("lorenz_dominates: profiles must have equal length");
    }
    UtilityProfile ps = p;
    UtilityProfile qs = q;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    Rational sum_p = 0;
    Rational sum_q = 0;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        sum_p += ps[k];
        sum_q += qs[k];
        if (sum_p < sum_q) return false;
    }
    return true;
}

} // namespace mixedfair
