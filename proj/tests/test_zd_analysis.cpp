#include <gtest/gtest.h>

#include "oracle.hpp"
#include "semimod/errors.hpp"
#include "semimod/zd_analysis.hpp"

using namespace semimod;

namespace {

oracle::Set as_set(const ElementSet& s) {
    const auto m = s.members();
    return {m.begin(), m.end()};
}

std::set<oracle::Set> prime_sets(const PrimeDecomposition& d) {
    std::set<oracle::Set> out;
    for (const Ideal& p : d.primes) out.insert(as_set(p.members()));
    return out;
}

std::vector<ModulePtr> fleet() {
    std::vector<ModulePtr> out;
    for (std::size_t n = 2; n <= 12; ++n) out.push_back(ring_as_module(build_zmod(n)));
    out.push_back(ring_as_module(build_truncated_poly_ring(2, 1, 2)));
    out.push_back(ring_as_module(build_truncated_poly_ring(2, 2, 3)));
    const RingPtr r6 = build_zmod(6);
    out.push_back(direct_sum(ring_as_module(r6), quotient_module(submodule_generated(ring_as_module(r6),
                                                                                    std::vector<Index>{2}))));
    const RingPtr r12 = build_zmod(12);
    out.push_back(quotient_module(submodule_generated(ring_as_module(r12), std::vector<Index>{4})));
    return out;
}

}  // namespace

TEST(Decomposition, ZmodMatchesPrimeFactors) {
    for (oracle::Elem n = 2; n <= 12; ++n) {
        const PrimeDecomposition d = require_decomposition(ring_as_module(build_zmod(n)));
        const auto zd = oracle::zero_divisors(oracle::zmod(n));
        // Z(Z/n) is a union of (p) over primes p | n.  For a prime n the
        // single prime is (0).
        std::set<oracle::Set> expected;
        const auto pf = oracle::prime_factors(n);
        if (pf.size() == 1 && pf[0] == n) expected.insert(oracle::Set{0});
        else
            for (oracle::Elem p : pf) expected.insert(oracle::multiples(n, p));
        EXPECT_EQ(prime_sets(d), expected) << n;
        EXPECT_EQ(d.degree, expected.size());
        oracle::Set uni;
        for (const auto& s : expected) uni.insert(s.begin(), s.end());
        EXPECT_EQ(uni, zd);
    }
}

TEST(Decomposition, KnownValues) {
    const PrimeDecomposition d6 = require_decomposition(ring_as_module(build_zmod(6)));
    ASSERT_EQ(d6.degree, 2u);
    EXPECT_EQ(as_set(d6.primes[0].members()), (oracle::Set{0, 2, 4}));
    EXPECT_EQ(as_set(d6.primes[1].members()), (oracle::Set{0, 3}));

    const PrimeDecomposition d4 = require_decomposition(ring_as_module(build_zmod(4)));
    ASSERT_EQ(d4.degree, 1u);
    EXPECT_EQ(as_set(d4.primes[0].members()), (oracle::Set{0, 2}));

    const PrimeDecomposition d5 = require_decomposition(ring_as_module(build_zmod(5)));
    ASSERT_EQ(d5.degree, 1u);
    EXPECT_EQ(d5.primes[0].size(), 1u);

    const RingPtr t = build_truncated_poly_ring(2, 2, 3);
    const PrimeDecomposition dt = require_decomposition(ring_as_module(t));
    ASSERT_EQ(dt.degree, 1u);
    EXPECT_EQ(dt.primes[0], ideal_generated(t, std::vector<Index>{*t->find("a"), *t->find("b")}));
}

TEST(Decomposition, FleetInvariants) {
    for (const ModulePtr& m : fleet()) {
        const ElementSet z = zero_divisor_set(*m);
        const PrimeDecomposition d = require_decomposition(m);
        EXPECT_TRUE(d.covers);
        EXPECT_TRUE(d.incomparable);
        ElementSet uni(m->ring().size());
        for (std::size_t i = 0; i < d.degree; ++i) {
            EXPECT_TRUE(is_prime_ideal(d.primes[i]).prime);
            EXPECT_TRUE(d.primes[i].members().is_subset_of(z));
            uni |= d.primes[i].members();
            for (std::size_t j = 0; j < d.degree; ++j) {
                if (i == j) continue;
                ASSERT_TRUE(d.separators[i][j]);
                EXPECT_TRUE(d.primes[i].contains(*d.separators[i][j]));
                EXPECT_FALSE(d.primes[j].contains(*d.separators[i][j]));
            }
        }
        EXPECT_EQ(uni, z) << m->label();
        EXPECT_TRUE(std::is_sorted(d.primes.begin(), d.primes.end()));
        // Primal iff degree one.
        EXPECT_EQ(is_primal(m).primal, d.degree == 1) << m->label();
        // Very few implies Property (A).
        if (has_very_few_zero_divisors(m).holds) EXPECT_TRUE(check_property_A(m).holds) << m->label();
    }
}

TEST(Decomposition, ZeroModuleIsDegenerate) {
    EXPECT_THROW(decompose_zero_divisors(ring_as_module(build_zmod(1))), DegenerateInputError);
}

TEST(Decomposition, IndependentOfElementLabels) {
    // Relabel Z/6 by a fixed permutation and map the result back.
    const RingPtr r = build_zmod(6);
    const std::vector<Index> perm{3, 5, 0, 4, 1, 2};  // old -> new
    std::vector<Index> inv(6);
    for (Index i = 0; i < 6; ++i) inv[perm[i]] = i;
    Table add(6, 6), mul(6, 6);
    for (Index a = 0; a < 6; ++a)
        for (Index b = 0; b < 6; ++b) {
            add(perm[a], perm[b]) = perm[r->add(a, b)];
            mul(perm[a], perm[b]) = perm[r->mul(a, b)];
        }
    const RingPtr permuted = make_ring(add, mul, perm[0], perm[1], "Z/6 permuted");
    const PrimeDecomposition d = require_decomposition(ring_as_module(permuted));
    const PrimeDecomposition base = require_decomposition(ring_as_module(r));
    std::set<oracle::Set> mapped;
    for (const Ideal& p : d.primes) {
        oracle::Set s;
        for (Index x : p.members().members()) s.insert(inv[x]);
        mapped.insert(s);
    }
    EXPECT_EQ(mapped, prime_sets(base));
}

TEST(VeryFew, KnownValues) {
    const VeryFewReport r6 = has_very_few_zero_divisors(ring_as_module(build_zmod(6)));
    EXPECT_TRUE(r6.holds);
    ASSERT_EQ(r6.associated.size(), 2u);

    const VeryFewReport r12 = has_very_few_zero_divisors(ring_as_module(build_zmod(12)));
    EXPECT_TRUE(r12.holds);
    ASSERT_EQ(r12.associated.size(), 2u);
    EXPECT_EQ(r12.associated[0].witness, 6u);
    EXPECT_EQ(r12.associated[1].witness, 4u);

    const VeryFewReport r4 = has_very_few_zero_divisors(ring_as_module(build_zmod(4)));
    EXPECT_TRUE(r4.holds);
    EXPECT_EQ(r4.associated[0].witness, 2u);
}

TEST(PropertyA, KnownValues) {
    const PropertyAReport p6 = check_property_A(ring_as_module(build_zmod(6)));
    EXPECT_TRUE(p6.holds);
    ASSERT_EQ(p6.witnesses.size(), 2u);
    EXPECT_EQ(p6.witnesses[0].annihilating, 3u);
    EXPECT_EQ(p6.witnesses[1].annihilating, 2u);

    const PropertyAReport p4 = check_property_A(ring_as_module(build_zmod(4)));
    EXPECT_TRUE(p4.holds);
    EXPECT_EQ(p4.witnesses[0].annihilating, 2u);

    const PropertyAReport p5 = check_property_A(ring_as_module(build_zmod(5)));
    EXPECT_TRUE(p5.holds);
    EXPECT_EQ(p5.witnesses[0].annihilating, 1u);
}

TEST(PropertyA, WitnessesAnnihilateTheirIdeals) {
    for (const ModulePtr& m : fleet()) {
        const PropertyAReport r = check_property_A(m);
        EXPECT_TRUE(r.holds);
        for (const PropertyAWitness& w : r.witnesses) {
            EXPECT_NE(w.annihilating, m->zero());
            for (Index a : w.ideal.members().members()) EXPECT_EQ(m->act(a, w.annihilating), m->zero());
        }
    }
}

TEST(Primal, KnownValues) {
    const PrimalReport p4 = is_primal(ring_as_module(build_zmod(4)));
    EXPECT_TRUE(p4.primal);
    EXPECT_EQ(as_set(p4.zero_divisors->members()), (oracle::Set{0, 2}));

    const PrimalReport p6 = is_primal(ring_as_module(build_zmod(6)));
    EXPECT_FALSE(p6.primal);
    ASSERT_TRUE(p6.violation);
    EXPECT_TRUE(p6.violation_is_sum);
    EXPECT_EQ(*p6.violation, (std::pair<Index, Index>{2, 3}));

    EXPECT_TRUE(is_primal(ring_as_module(build_zmod(5))).primal);
}

TEST(MaximalIdealsWithin, NonUnitsOfLocalRing) {
    const RingPtr t = build_truncated_poly_ring(2, 2, 3);
    const auto primes = prime_ideals(t);
    ASSERT_EQ(primes.size(), 1u);
    EXPECT_EQ(primes[0].size(), 32u);
}
