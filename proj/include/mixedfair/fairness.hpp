#pragma once

#include "mixedfair/allocation.hpp"
#include "mixedfair/instance.hpp"

namespace mixedfair {

// Additive value of a bundle to an agent:
//   sum of the agent's values over the bundle's indivisible goods
//   plus fraction-weighted values over the divisible goods.
Rational value_of(const Instance& inst, int agent, const Bundle& bundle);

// Indivisible part only.
Rational value_of_goods(const Instance& inst, int agent, const std::vector<int>& goods);

// Envy-freeness: v_i(A_i) >= v_i(A_j) for every ordered pair.
bool is_ef(const Instance& inst, const Allocation& alloc);

// Envy-freeness up to one good, defined for indivisible-only instances.
// Throws PreconditionError when the instance has divisible goods; project
// with Instance::indivisible_projection first.
bool is_ef1(const Instance& inst, const Allocation& alloc);

// Envy-freeness for mixed goods, weak variant: the one-good escape applies
// to pairs (i, j) where the divisible part of j's bundle is worth 0 to i.
bool is_efm_pos(const Instance& inst, const Allocation& alloc);

// Strong variant: the escape applies only when j holds no divisible amount
// at all. Implies is_efm_pos.
bool is_efm_zero(const Instance& inst, const Allocation& alloc);

// First ordered pair (i, j) violating the corresponding condition, if any.
// Backs the CLI's witness output.
struct EnvyWitness {
    int envious = 0;
    int envied = 0;
};
std::optional<EnvyWitness> find_ef_violation(const Instance& inst, const Allocation& alloc);
std::optional<EnvyWitness> find_ef1_violation(const Instance& inst, const Allocation& alloc);
std::optional<EnvyWitness> find_efm_pos_violation(const Instance& inst, const Allocation& alloc);
std::optional<EnvyWitness> find_efm_zero_violation(const Instance& inst, const Allocation& alloc);

} // namespace mixedfair
