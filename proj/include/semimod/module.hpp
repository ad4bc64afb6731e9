#pragma once

// Finite unital modules over a FiniteRing, their submodules, annihilators,
// zero-divisors and associated primes.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semimod/element_set.hpp"
#include "semimod/ring.hpp"
#include "semimod/table.hpp"

namespace semimod {

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

class FiniteModule {
public:
    // Unchecked; use make_module or a builder.
    FiniteModule(RingPtr ring, Table add, Table action, Index zero, std::string label,
                 std::vector<std::string> names);

    const FiniteRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    std::size_t size() const { return add_.rows(); }
    Index zero() const { return zero_; }
    const std::string& label() const { return label_; }
    bool is_zero_module() const { return size() == 1; }

    Index add(Index x, Index y) const { return add_(x, y); }
    Index neg(Index x) const { return neg_[x]; }
    Index sub(Index x, Index y) const { return add_(x, neg_[y]); }
    // Action of ring element r on module element x.
    Index act(Index r, Index x) const { return action_(r, x); }

    const Table& add_table() const { return add_; }
    const Table& action_table() const { return action_; }

    std::string name(Index x) const;
    bool has_names() const { return !names_.empty(); }
    std::optional<Index> find(std::string_view name) const;

    bool same_structure(const FiniteModule& other) const;

private:
    RingPtr ring_;
    Table add_;
    Table action_;
    Index zero_;
    std::string label_;
    std::vector<std::string> names_;
    std::vector<Index> neg_;
};

bool same_module(const FiniteModule& a, const FiniteModule& b);

std::optional<AxiomFailure> audit_module(const FiniteModule& module);

// Table variant: validates every module axiom.
ModulePtr make_module(RingPtr ring, Table add, Table action, Index zero, std::string label,
                      std::vector<std::string> names = {}, const Limits& limits = {});

ModulePtr ring_as_module(const RingPtr& ring);
ModulePtr direct_sum(const ModulePtr& first, const ModulePtr& second, const Limits& limits = {});

class Submodule {
public:
    // Throws ValidationError unless `members` is a submodule.
    Submodule(ModulePtr module, ElementSet members);

    static Submodule zero(ModulePtr module);
    static Submodule whole(ModulePtr module);

    const FiniteModule& module() const { return *module_; }
    const ModulePtr& module_ptr() const { return module_; }
    const ElementSet& members() const { return members_; }
    bool contains(Index x) const { return members_.contains(x); }
    std::size_t size() const { return members_.size(); }
    bool is_zero() const { return members_.size() == 1; }
    bool is_subset_of(const Submodule& other) const { return members_.is_subset_of(other.members_); }

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.members_ == b.members_; }
    friend auto operator<=>(const Submodule& a, const Submodule& b) { return a.members_ <=> b.members_; }

private:
    struct Trusted {};
    Submodule(ModulePtr module, ElementSet members, Trusted)
        : module_(std::move(module)), members_(std::move(members)) {}

    friend Submodule submodule_generated(const ModulePtr&, const ElementSet&);
    friend Submodule annihilator_in_module(const ElementSet&, const ModulePtr&);

    ModulePtr module_;
    ElementSet members_;
};

ModulePtr quotient_module(const Submodule& submodule);

Submodule submodule_generated(const ModulePtr& module, const ElementSet& generators);
Submodule submodule_generated(const ModulePtr& module, std::span<const Index> generators);

// Submodule generated by {a x : a in I, x in N}.
Submodule ideal_action_submodule(const Ideal& ideal, const Submodule& submodule);

// {m : a m = 0 for every a in the subset}.  For an ideal, pass its members;
// the annihilator of a generating set equals that of the ideal.
Submodule annihilator_in_module(const ElementSet& ring_subset, const ModulePtr& module);
Submodule annihilator_in_module(const Ideal& ideal, const ModulePtr& module);

// Ann(m) = {r : r m = 0}.
Ideal annihilator_ideal_of_element(const ModulePtr& module, Index m);

// Z_R(M).  Throws DegenerateInputError for the zero module.
ElementSet zero_divisor_set(const FiniteModule& module);

struct AssociatedPrime {
    Ideal prime;
    Index witness;  // least nonzero m with Ann(m) = prime
};

// Prime annihilators of nonzero elements, deduplicated, canonical order.
std::vector<AssociatedPrime> associated_primes(const ModulePtr& module);

struct SubmoduleViolation {
    enum class Kind { improper, prime, primary };
    Kind kind;
    Index r = 0;
    Index x = 0;
    // Exponents 1..exponent_bound were tried for the primary condition.
    std::size_t exponent_bound = 0;
};

struct SubmoduleClassification {
    bool is_proper = false;
    bool is_prime = false;
    bool is_primary = false;
    std::optional<SubmoduleViolation> prime_violation;
    std::optional<SubmoduleViolation> primary_violation;
};

// Exhaustive check over all (r, x); primary exponents searched up to |R|.
SubmoduleClassification classify_submodule(const Submodule& p);

// r M as an element subset.
ElementSet scaled_module(const FiniteModule& module, Index r);

}  // namespace semimod
