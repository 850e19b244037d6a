#include "mixedfair/allocation.hpp"

#include <algorithm>

#include "mixedfair/errors.hpp"

namespace mixedfair {

void validate_allocation(const Instance& inst, const Allocation& alloc) {
    const int n = inst.n();
    const int m = inst.m();
    const int m_bar = inst.m_bar();
    if (static_cast<int>(alloc.bundles.size()) != n) {
        throw ValidationError("allocation must have one bundle per agent");
    }

    std::vector<int> holder(m, -2);
    auto claim = [&](int good, int who) {
        if (good < 0 || good >= m) throw ValidationError("indivisible good index out of range");
        if (holder[good] != -2) throw ValidationError("indivisible good allocated twice");
        holder[good] = who;
    };
    for (int i = 0; i < n; ++i) {
        const Bundle& b = alloc.bundles[i];
        if (!std::is_sorted(b.indivisible.begin(), b.indivisible.end())) {
            throw ValidationError("bundle good lists must be sorted");
        }
        for (int g : b.indivisible) claim(g, i);
        if (static_cast<int>(b.fractions.size()) != m_bar) {
            throw ValidationError("fraction vector length must equal the divisible good count");
        }
        for (const Rational& f : b.fractions) {
            if (f < 0 || f > 1) throw ValidationError("fractions must lie in [0, 1]");
        }
    }
    for (int g : alloc.disposed_indivisible) {
        claim(g, kDisposed);
        if (inst.indivisible_good_valued(g)) {
            throw ValidationError("only goods nobody values may be disposed");
        }
    }
    for (int g = 0; g < m; ++g) {
        if (holder[g] == -2) throw ValidationError("indivisible good left unallocated");
    }

    std::vector<bool> disposed_div(m_bar, false);
    for (int g : alloc.disposed_divisible) {
        if (g < 0 || g >= m_bar) throw ValidationError("divisible good index out of range");
        if (disposed_div[g]) throw ValidationError("divisible good disposed twice");
        disposed_div[g] = true;
        if (inst.divisible_good_valued(g)) {
            throw ValidationError("only goods nobody values may be disposed");
        }
    }
    for (int g = 0; g < m_bar; ++g) {
        Rational total = 0;
        for (int i = 0; i < n; ++i) total += alloc.bundles[i].fractions[g];
        const Rational expected = disposed_div[g] ? Rational(0) : Rational(1);
        if (total != expected) {
            throw ValidationError("divisible good fractions must sum to " +
                                  std::string(disposed_div[g] ? "0" : "1"));
        }
    }
}

Allocation allocation_from_assignment(const Instance& inst, const AssignmentVector& owner) {
    if (static_cast<int>(owner.size()) != inst.m()) {
        throw ValidationError("assignment length must equal the indivisible good count");
    }
    Allocation alloc;
    alloc.bundles.assign(inst.n(), Bundle{{}, std::vector<Rational>(inst.m_bar(), Rational(0))});
    for (int g = 0; g < inst.m(); ++g) {
        const int who = owner[g];
        if (who == kDisposed) {
            alloc.disposed_indivisible.push_back(g);
        } else if (who >= 0 && who < inst.n()) {
            alloc.bundles[who].indivisible.push_back(g);
        } else {
            throw ValidationError("assignment owner out of range");
        }
    }
    return alloc;
}

AssignmentVector assignment_of(const Instance& inst, const Allocation& alloc) {
    AssignmentVector owner(inst.m(), kDisposed);
    for (int i = 0; i < static_cast<int>(alloc.bundles.size()); ++i) {
        for (int g : alloc.bundles[i].indivisible) owner[g] = i;
    }
    return owner;
}

Allocation indivisible_projection(const Allocation& alloc) {
    Allocation out;
    out.bundles.reserve(alloc.bundles.size());
    for (const Bundle& b : alloc.bundles) out.bundles.push_back(Bundle{b.indivisible, {}});
    out.disposed_indivisible = alloc.disposed_indivisible;
    return out;
}

} // namespace mixedfair
