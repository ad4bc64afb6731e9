#pragma once

// Finite commutative rings with identity, given by explicit addition and
// multiplication tables, and their ideals.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semimod/element_set.hpp"
#include "semimod/table.hpp"

namespace semimod {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

class FiniteRing {
public:
    // Unchecked; use make_ring or one of the builders.
    FiniteRing(Table add, Table mul, Index zero, Index one, std::string label,
               std::vector<std::string> names);

    std::size_t size() const { return add_.rows(); }
    Index zero() const { return zero_; }
    Index one() const { return one_; }
    const std::string& label() const { return label_; }

    Index add(Index a, Index b) const { return add_(a, b); }
    Index mul(Index a, Index b) const { return mul_(a, b); }
    Index neg(Index a) const { return neg_[a]; }
    Index sub(Index a, Index b) const { return add_(a, neg_[b]); }
    Index pow(Index a, std::size_t n) const;

    const Table& add_table() const { return add_; }
    const Table& mul_table() const { return mul_; }

    bool is_zero_ring() const { return size() == 1; }

    std::string name(Index a) const;
    bool has_names() const { return !names_.empty(); }
    std::optional<Index> find(std::string_view name) const;

    // Same tables and distinguished elements (labels ignored).
    bool same_structure(const FiniteRing& other) const;

private:
    Table add_;
    Table mul_;
    Index zero_;
    Index one_;
    std::string label_;
    std::vector<std::string> names_;
    std::vector<Index> neg_;
};

bool same_ring(const FiniteRing& a, const FiniteRing& b);

// Full axiom scan: abelian group, commutative associative unital
// multiplication, distributivity.
std::optional<AxiomFailure> audit_ring(const FiniteRing& ring);

// Builds from tables and runs audit_ring; throws ValidationError on failure.
RingPtr make_ring(Table add, Table mul, Index zero, Index one, std::string label,
                  std::vector<std::string> names = {}, const Limits& limits = {});

RingPtr build_zmod(std::size_t n, std::size_t cap = 256);

// (Z/p)[x_1..x_nvars] modulo every monomial of degree >= degree_cap.
// Basis monomials are ordered by degree, then descending lexicographically
// (1, a, b, a^2, ab, b^2, ...); element index = sum c_i p^i over that basis.
RingPtr build_truncated_poly_ring(unsigned p, unsigned nvars, unsigned degree_cap,
                                  std::size_t size_cap = 4096);

class Ideal {
public:
    // Throws ValidationError unless `members` is an ideal of `ring`.
    Ideal(RingPtr ring, ElementSet members);

    static Ideal zero(RingPtr ring);
    static Ideal unit(RingPtr ring);

    const FiniteRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    const ElementSet& members() const { return members_; }
    bool contains(Index a) const { return members_.contains(a); }
    std::size_t size() const { return members_.size(); }
    bool is_unit() const { return members_.contains(ring_->one()); }
    bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.members_ == b.members_; }
    friend auto operator<=>(const Ideal& a, const Ideal& b) { return a.members_ <=> b.members_; }

private:
    struct Trusted {};
    Ideal(RingPtr ring, ElementSet members, Trusted)
        : ring_(std::move(ring)), members_(std::move(members)) {}

    friend Ideal ideal_generated(const RingPtr&, std::span<const Index>);
    friend Ideal ideal_generated(const RingPtr&, const ElementSet&);

    RingPtr ring_;
    ElementSet members_;
};

Ideal ideal_generated(const RingPtr& ring, std::span<const Index> generators);
Ideal ideal_generated(const RingPtr& ring, const ElementSet& generators);
Ideal ideal_product(const Ideal& a, const Ideal& b);
// I^0 is the unit ideal.
Ideal ideal_power(const Ideal& ideal, std::size_t k);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

struct PrimeCheck {
    bool prime = false;
    bool proper = true;
    // (a, b) with ab in I while a, b are not; empty when prime or improper.
    std::optional<std::pair<Index, Index>> witness;
};
PrimeCheck is_prime_ideal(const Ideal& ideal);

struct AvoidanceResult {
    // Least i with I contained in primes[i].
    std::optional<std::size_t> index;
    // Element of I outside every prime, when I is not covered.
    std::optional<Index> uncovered;
};
AvoidanceResult prime_avoidance_locate(const Ideal& ideal, std::span<const Ideal> primes);

// Ideals maximal among those contained in `region`, found by greedy growth
// from every principal ideal (z) inside the region.  Canonically ordered.
std::vector<Ideal> maximal_ideals_within(const RingPtr& ring, const ElementSet& region);

// All prime ideals of a finite ring (these are its maximal ideals).
std::vector<Ideal> prime_ideals(const RingPtr& ring);

RingPtr quotient_ring(const Ideal& ideal);

// Cosets of an additive subgroup: class id per element and the least
// representative per class, classes numbered by their least member.
struct CosetPartition {
    std::vector<Index> class_of;
    std::vector<Index> representative;
};
CosetPartition coset_partition(const Table& add, const ElementSet& subgroup);

}  // namespace semimod
