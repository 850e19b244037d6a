#include "mixedfair/fairness.hpp"

#include "mixedfair/errors.hpp"

namespace mixedfair {

namespace {

// Value agent i places on agent j's divisible share.
Rational divisible_part_value(const Instance& inst, int i, const Bundle& of_j) {
    Rational total = 0;
    for (int g = 0; g < inst.m_bar(); ++g) {
        total += of_j.fractions[g] * inst.divisible_value(i, g);
    }
    return total;
}

bool bundle_has_divisible_amount(const Bundle& b) {
    for (const Rational& f : b.fractions) {
        if (f != 0) return true;
    }
    return false;
}

// True when agent i's envy toward bundle j vanishes after hypothetically
// removing one indivisible good from it (the divisible part stays).
bool ef1_toward(const Instance& inst, int i, const Rational& own_value, const Bundle& of_j) {
    Rational envied = divisible_part_value(inst, i, of_j);
    Rational largest = 0;
    for (int g : of_j.indivisible) {
        const Rational& v = inst.indivisible_value(i, g);
        envied += v;
        if (v > largest) largest = v;
    }
    return own_value >= envied - largest;
}

template <typename EscapeApplies>
std::optional<EnvyWitness> find_efm_violation(const Instance& inst, const Allocation& alloc,
                                              EscapeApplies escape_applies) {
    validate_allocation(inst, alloc);
    const int n = inst.n();
    std::vector<Rational> own(n);
    for (int i = 0; i < n; ++i) own[i] = value_of(inst, i, alloc.bundles[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Bundle& bj = alloc.bundles[j];
            if (escape_applies(i, bj) && !bj.indivisible.empty()) {
                if (!ef1_toward(inst, i, own[i], bj)) return EnvyWitness{i, j};
            } else if (own[i] < value_of(inst, i, bj)) {
                return EnvyWitness{i, j};
            }
        }
    }
    return std::nullopt;
}

} // namespace

Rational value_of(const Instance& inst, int agent, const Bundle& bundle) {
    if (static_cast<int>(bundle.fractions.size()) != inst.m_bar()) {
        throw ValidationError("value_of: fraction vector length must equal the divisible good count");
    }
    Rational total = value_of_goods(inst, agent, bundle.indivisible);
    for (int g = 0; g < inst.m_bar(); ++g) {
        total += bundle.fractions[g] * inst.divisible_value(agent, g);
    }
    return total;
}

Rational value_of_goods(const Instance& inst, int agent, const std::vector<int>& goods) {
    Rational total = 0;
    for (int g : goods) total += inst.indivisible_value(agent, g);
    return total;
}

std::optional<EnvyWitness> find_ef_violation(const Instance& inst, const Allocation& alloc) {
    validate_allocation(inst, alloc);
    const int n = inst.n();
    std::vector<Rational> own(n);
    for (int i = 0; i < n; ++i) own[i] = value_of(inst, i, alloc.bundles[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && own[i] < value_of(inst, i, alloc.bundles[j])) {
                return EnvyWitness{i, j};
            }
        }
    }
    return std::nullopt;
}

std::optional<EnvyWitness> find_ef1_violation(const Instance& inst, const Allocation& alloc) {
    if (inst.m_bar() != 0) {
        throw PreconditionError("EF1 is defined for indivisible-only instances; use the EFM predicates");
    }
    validate_allocation(inst, alloc);
    const int n = inst.n();
    std::vector<Rational> own(n);
    for (int i = 0; i < n; ++i) own[i] = value_of(inst, i, alloc.bundles[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Bundle& bj = alloc.bundles[j];
            if (bj.indivisible.empty()) continue;
            if (!ef1_toward(inst, i, own[i], bj)) return EnvyWitness{i, j};
        }
    }
    return std::nullopt;
}

std::optional<EnvyWitness> find_efm_pos_violation(const Instance& inst, const Allocation& alloc) {
    return find_efm_violation(inst, alloc, [&](int i, const Bundle& bj) {
        return divisible_part_value(inst, i, bj) == 0;
    });
}

std::optional<EnvyWitness> find_efm_zero_violation(const Instance& inst, const Allocation& alloc) {
    return find_efm_violation(inst, alloc, [&](int, const Bundle& bj) {
        return !bundle_has_divisible_amount(bj);
    });
}

bool is_ef(const Instance& inst, const Allocation& alloc) {
    return !find_ef_violation(inst, alloc).has_value();
}

bool is_ef1(const Instance& inst, const Allocation& alloc) {
    return !find_ef1_violation(inst, alloc).has_value();
}

bool is_efm_pos(const Instance& inst, const Allocation& alloc) {
    return !find_efm_pos_violation(inst, alloc).has_value();
}

bool is_efm_zero(const Instance& inst, const Allocation& alloc) {
    return !find_efm_zero_violation(inst, alloc).has_value();
}

} // namespace mixedfair
