#pragma once

// Zero-divisor structure of a finite module: the incomparable prime cover of
// Z_R(M), very few zero-divisors, Property (A), primality.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "semimod/module.hpp"
#include "semimod/ring.hpp"

namespace semimod {

struct PrimeDecomposition {
    std::vector<Ideal> primes;  // canonical order
    std::size_t degree = 0;
    bool covers = false;
    bool incomparable = false;
    // Per prime: a nonzero m with Ann(m) = p when p is associated, otherwise
    // an element of Z lying in p alone.
    std::vector<Index> witnesses;
    // Per ordered pair (i, j), i != j: an element of p_i outside p_j.
    std::vector<std::vector<std::optional<Index>>> separators;
};

struct NoPrimeCover {
    Index uncovered;
};

using DecompositionOutcome = std::variant<PrimeDecomposition, NoPrimeCover>;

DecompositionOutcome decompose_zero_divisors(const ModulePtr& module);

// Convenience: throws InvariantViolation when no cover exists.
PrimeDecomposition require_decomposition(const ModulePtr& module);

struct VeryFewReport {
    bool holds = false;
    std::vector<AssociatedPrime> associated;
    // Element of Z outside every associated prime, when not very few.
    std::optional<Index> uncovered;
};
VeryFewReport has_very_few_zero_divisors(const ModulePtr& module);

struct PropertyAWitness {
    Ideal ideal;
    Index annihilating;  // nonzero m with I m = 0
};

struct PropertyAReport {
    bool holds = false;
    std::size_t checked_ideals = 0;
    std::vector<PropertyAWitness> witnesses;
    std::optional<Ideal> failure;
};
// Enumerates ideals maximal inside Z_R(M); Ann is antitone, so these suffice.
PropertyAReport check_property_A(const ModulePtr& module);

struct PrimalReport {
    bool primal = false;
    std::optional<Ideal> zero_divisors;  // when primal
    // a, b in Z with a + b outside Z (or r, z with r z outside Z).
    std::optional<std::pair<Index, Index>> violation;
    bool violation_is_sum = true;
};
PrimalReport is_primal(const ModulePtr& module);

}  // namespace semimod
