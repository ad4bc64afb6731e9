#include "semimod/zd_analysis.hpp"

#include <algorithm>

#include "semimod/errors.hpp"

namespace semimod {

namespace {

void require_nonzero(const FiniteModule& module, const char* op) {
    if (module.is_zero_module())
        throw DegenerateInputError(std::string(op) + ": module '" + module.label() +
                                   "' is the zero module");
}

Index least_nonzero(const ElementSet& s, Index zero) {
    for (auto x = s.first(); x; x = s.next_from(*x + 1))
        if (*x != zero) return *x;
    throw InvariantViolation("expected a nonzero element");
}

}  // namespace

DecompositionOutcome decompose_zero_divisors(const ModulePtr& module) {
    require_nonzero(*module, "decompose_zero_divisors");
    const RingPtr& ring = module->ring_ptr();
    const ElementSet z = zero_divisor_set(*module);

    std::vector<Ideal> candidates;
    std::vector<std::optional<Index>> ass_witness;
    for (AssociatedPrime& a : associated_primes(module)) {
        candidates.push_back(std::move(a.prime));
        ass_witness.push_back(a.witness);
    }
    // Fallback: primes among the ideals maximal inside Z.
    for (Ideal& m : maximal_ideals_within(ring, z)) {
        if (std::find(candidates.begin(), candidates.end(), m) != candidates.end()) continue;
        if (!is_prime_ideal(m).prime) continue;
        candidates.push_back(std::move(m));
        ass_witness.push_back(std::nullopt);
    }

    PrimeDecomposition d;
    std::vector<std::optional<Index>> kept_witness;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
            dominated = j != i && candidates[i].is_subset_of(candidates[j]) &&
                        candidates[i] != candidates[j];
        if (!dominated) {
            d.primes.push_back(candidates[i]);
            kept_witness.push_back(ass_witness[i]);
        }
    }
    std::vector<std::size_t> order(d.primes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return d.primes[a] < d.primes[b]; });
    std::vector<Ideal> sorted;
    std::vector<std::optional<Index>> sorted_witness;
    for (std::size_t i : order) {
        sorted.push_back(d.primes[i]);
        sorted_witness.push_back(kept_witness[i]);
    }
    d.primes = std::move(sorted);

    ElementSet cover(ring->size());
    for (const Ideal& p : d.primes) cover |= p.members();
    if (auto outside = z.minus(cover).first()) return NoPrimeCover{*outside};
    if (cover != z) throw InvariantViolation("decompose_zero_divisors: cover exceeds Z_R(M)");

    d.degree = d.primes.size();
    d.covers = true;
    const std::size_t n = d.degree;
    d.separators.assign(n, std::vector<std::optional<Index>>(n));
    d.incomparable = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            d.separators[i][j] = d.primes[i].members().minus(d.primes[j].members()).first();
            if (!d.separators[i][j]) d.incomparable = false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted_witness[i]) {
            d.witnesses.push_back(*sorted_witness[i]);
            continue;
        }
        ElementSet others(ring->size());
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others |= d.primes[j].members();
        auto own = d.primes[i].members().minus(others).first();
        if (!own) throw InvariantViolation("decompose_zero_divisors: prime covered by the others");
        d.witnesses.push_back(*own);
    }
    return d;
}

PrimeDecomposition require_decomposition(const ModulePtr& module) {
    auto outcome = decompose_zero_divisors(module);
    if (auto* none = std::get_if<NoPrimeCover>(&outcome))
        throw InvariantViolation("no prime cover of Z_R(M); uncovered element " +
                                 std::to_string(none->uncovered));
    return std::get<PrimeDecomposition>(std::move(outcome));
}

VeryFewReport has_very_few_zero_divisors(const ModulePtr& module) {
    require_nonzero(*module, "has_very_few_zero_divisors");
    VeryFewReport out;
    out.associated = associated_primes(module);
    const ElementSet z = zero_divisor_set(*module);
    ElementSet cover(module->ring().size());
    for (const AssociatedPrime& a : out.associated) cover |= a.prime.members();
    out.uncovered = z.minus(cover).first();
    out.holds = !out.uncovered && cover == z;
    return out;
}

PropertyAReport check_property_A(const ModulePtr& module) {
    require_nonzero(*module, "check_property_A");
    PropertyAReport out;
    const ElementSet z = zero_divisor_set(*module);
    for (Ideal& ideal : maximal_ideals_within(module->ring_ptr(), z)) {
        ++out.checked_ideals;
        const Submodule ann = annihilator_in_module(ideal, module);
        if (ann.is_zero()) {
            if (!out.failure) out.failure = ideal;
            continue;
        }
        out.witnesses.push_back({std::move(ideal), least_nonzero(ann.members(), module->zero())});
    }
    out.holds = !out.failure;
    return out;
}

PrimalReport is_primal(const ModulePtr& module) {
    require_nonzero(*module, "is_primal");
    PrimalReport out;
    const FiniteRing& ring = module->ring();
    const ElementSet z = zero_divisor_set(*module);
    const auto zs = z.members();
    for (Index a : zs) {
        for (Index b : zs) {
            if (!z.contains(ring.add(a, b))) {
                out.violation = std::make_pair(a, b);
                return out;
            }
        }
    }
    for (Index r = 0; r < ring.size(); ++r) {
        for (Index a : zs) {
            if (!z.contains(ring.mul(r, a))) {
                out.violation = std::make_pair(r, a);
                out.violation_is_sum = false;
                return out;
            }
        }
    }
    Ideal zi(module->ring_ptr(), z);
    if (!is_prime_ideal(zi).prime)
        throw InvariantViolation("is_primal: Z_R(M) is an ideal but not prime");
    const PrimeDecomposition d = require_decomposition(module);
    if (d.degree != 1 || d.primes.front() != zi)
        throw InvariantViolation("is_primal: primal module whose decomposition has degree != 1");
    out.primal = true;
    out.zero_divisors = std::move(zi);
    return out;
}

}  // namespace semimod
