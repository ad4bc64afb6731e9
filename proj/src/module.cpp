#include "semimod/module.hpp"

#include <algorithm>

#include "semimod/errors.hpp"

namespace semimod {

namespace {

constexpr std::size_t kAuditLimit = 256;

void check_or_throw(const FiniteModule& module) {
    if (auto failure = audit_module(module))
        throw ValidationError("module '" + module.label() + "': " + failure->describe());
}

void require_nonzero(const FiniteModule& module, const char* op) {
    if (module.is_zero_module())
        throw DegenerateInputError(std::string(op) + ": module '" + module.label() +
                                   "' is the zero module");
}

}  // namespace

FiniteModule::FiniteModule(RingPtr ring, Table add, Table action, Index zero, std::string label,
                           std::vector<std::string> names)
    : ring_(std::move(ring)),
      add_(std::move(add)),
      action_(std::move(action)),
      zero_(zero),
      label_(std::move(label)),
      names_(std::move(names)),
      neg_(add_.rows(), zero) {
    for (Index a = 0; a < add_.rows(); ++a) {
        for (Index b = 0; b < add_.rows(); ++b) {
            if (add_(a, b) == zero_) {
                neg_[a] = b;
                break;
            }
        }
    }
}

std::string FiniteModule::name(Index x) const {
    return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<Index> FiniteModule::find(std::string_view name) const {
    for (Index x = 0; x < size(); ++x)
        if (this->name(x) == name) return x;
    return std::nullopt;
}

bool FiniteModule::same_structure(const FiniteModule& other) const {
    return same_ring(*ring_, *other.ring_) && zero_ == other.zero_ && add_ == other.add_ &&
           action_ == other.action_;
}

bool same_module(const FiniteModule& a, const FiniteModule& b) {
    return &a == &b || a.same_structure(b);
}

std::optional<AxiomFailure> audit_module(const FiniteModule& module) {
    const FiniteRing& ring = module.ring();
    const Table& act = module.action_table();
    const std::size_t n = ring.size();
    const std::size_t m = module.size();
    if (auto failure = audit_abelian_group(module.add_table(), module.zero())) return failure;
    if (act.rows() != n || act.cols() != m) return AxiomFailure{"action table shape", {}};
    for (Index r = 0; r < n; ++r)
        for (Index x = 0; x < m; ++x)
            if (act(r, x) >= m) return AxiomFailure{"action entry in range", {r, x}};
    for (Index x = 0; x < m; ++x)
        if (act(ring.one(), x) != x) return AxiomFailure{"unital action", {x}};
    for (Index r = 0; r < n; ++r) {
        for (Index x = 0; x < m; ++x) {
            for (Index y = 0; y < m; ++y)
                if (act(r, module.add(x, y)) != module.add(act(r, x), act(r, y)))
                    return AxiomFailure{"r(x+y) = rx+ry", {r, x, y}};
        }
    }
    for (Index r = 0; r < n; ++r) {
        for (Index s = 0; s < n; ++s) {
            for (Index x = 0; x < m; ++x) {
                if (act(ring.add(r, s), x) != module.add(act(r, x), act(s, x)))
                    return AxiomFailure{"(r+s)x = rx+sx", {r, s, x}};
                if (act(ring.mul(r, s), x) != act(r, act(s, x)))
                    return AxiomFailure{"(rs)x = r(sx)", {r, s, x}};
            }
        }
    }
    return std::nullopt;
}

ModulePtr make_module(RingPtr ring, Table add, Table action, Index zero, std::string label,
                      std::vector<std::string> names, const Limits& limits) {
    if (add.rows() == 0) throw ValidationError("module '" + label + "': no elements");
    if (add.rows() > limits.module_cap)
        throw SizeError("module '" + label + "': " + std::to_string(add.rows()) +
                        " elements exceeds cap " + std::to_string(limits.module_cap));
    if (!names.empty() && names.size() != add.rows())
        throw ValidationError("module '" + label + "': element name count does not match size");
    auto module = std::make_shared<const FiniteModule>(std::move(ring), std::move(add),
                                                       std::move(action), zero, std::move(label),
                                                       std::move(names));
    check_or_throw(*module);
    return module;
}

ModulePtr ring_as_module(const RingPtr& ring) {
    std::vector<std::string> names;
    if (ring->has_names()) {
        names.resize(ring->size());
        for (Index a = 0; a < ring->size(); ++a) names[a] = ring->name(a);
    }
    return std::make_shared<const FiniteModule>(ring, ring->add_table(), ring->mul_table(),
                                                ring->zero(), ring->label(), std::move(names));
}

ModulePtr direct_sum(const ModulePtr& first, const ModulePtr& second, const Limits& limits) {
    if (!same_ring(first->ring(), second->ring()))
        throw MismatchError("direct_sum: modules over different rings");
    const std::size_t m1 = first->size();
    const std::size_t m2 = second->size();
    const std::size_t m = m1 * m2;
    if (m > limits.module_cap)
        throw SizeError("direct_sum: " + std::to_string(m) + " elements exceeds cap " +
                        std::to_string(limits.module_cap));
    auto encode = [m2](Index a, Index b) { return static_cast<Index>(a * m2 + b); };
    const std::size_t n = first->ring().size();
    Table add(m, m), action(n, m);
    for (Index x = 0; x < m; ++x) {
        const Index x1 = x / m2, x2 = x % m2;
        for (Index y = 0; y < m; ++y)
            add(x, y) = encode(first->add(x1, y / m2), second->add(x2, y % m2));
        for (Index r = 0; r < n; ++r) action(r, x) = encode(first->act(r, x1), second->act(r, x2));
    }
    std::vector<std::string> names(m);
    for (Index x = 0; x < m; ++x)
        names[x] = "(" + first->name(x / m2) + "," + second->name(x % m2) + ")";
    auto out = std::make_shared<const FiniteModule>(
        first->ring_ptr(), std::move(add), std::move(action),
        encode(first->zero(), second->zero()), first->label() + "+" + second->label(),
        std::move(names));
    if (n * m <= kAuditLimit * kAuditLimit) check_or_throw(*out);
    return out;
}

// ---------------------------------------------------------------------------
// Submodules

Submodule::Submodule(ModulePtr module, ElementSet members)
    : module_(std::move(module)), members_(std::move(members)) {
    const FiniteModule& mod = *module_;
    if (members_.universe() != mod.size()) throw ValidationError("submodule: subset universe mismatch");
    if (!members_.contains(mod.zero())) throw ValidationError("submodule: does not contain zero");
    const auto elems = members_.members();
    for (Index x : elems) {
        for (Index y : elems)
            if (!members_.contains(mod.add(x, y)))
                throw ValidationError("submodule: not closed under addition at (" +
                                      std::to_string(x) + ", " + std::to_string(y) + ")");
        for (Index r = 0; r < mod.ring().size(); ++r)
            if (!members_.contains(mod.act(r, x)))
                throw ValidationError("submodule: not closed under the ring action at (" +
                                      std::to_string(r) + ", " + std::to_string(x) + ")");
    }
}

Submodule Submodule::zero(ModulePtr module) {
    ElementSet s(module->size());
    s.insert(module->zero());
    return Submodule(std::move(module), std::move(s), Trusted{});
}

Submodule Submodule::whole(ModulePtr module) {
    ElementSet s = ElementSet::full(module->size());
    return Submodule(std::move(module), std::move(s), Trusted{});
}

ModulePtr quotient_module(const Submodule& submodule) {
    const FiniteModule& mod = submodule.module();
    const CosetPartition cosets = coset_partition(mod.add_table(), submodule.members());
    const std::size_t q = cosets.representative.size();
    const std::size_t n = mod.ring().size();
    Table add(q, q), action(n, q);
    for (Index i = 0; i < q; ++i) {
        const Index a = cosets.representative[i];
        for (Index j = 0; j < q; ++j)
            add(i, j) = cosets.class_of[mod.add(a, cosets.representative[j])];
        for (Index r = 0; r < n; ++r) action(r, i) = cosets.class_of[mod.act(r, a)];
    }
    std::vector<std::string> names(q);
    for (Index i = 0; i < q; ++i) names[i] = mod.name(cosets.representative[i]);
    auto out = std::make_shared<const FiniteModule>(mod.ring_ptr(), std::move(add),
                                                    std::move(action), cosets.class_of[mod.zero()],
                                                    mod.label() + "/N", std::move(names));
    if (n * q <= kAuditLimit * kAuditLimit) check_or_throw(*out);
    return out;
}

Submodule submodule_generated(const ModulePtr& module, const ElementSet& generators) {
    const FiniteModule& mod = *module;
    ElementSet multiples(mod.size());
    for (auto g = generators.first(); g; g = generators.next_from(*g + 1))
        for (Index r = 0; r < mod.ring().size(); ++r) multiples.insert(mod.act(r, *g));
    return Submodule(module, additive_closure(mod.add_table(), mod.zero(), multiples),
                     Submodule::Trusted{});
}

Submodule submodule_generated(const ModulePtr& module, std::span<const Index> generators) {
    ElementSet gens(module->size());
    for (Index g : generators) {
        if (g >= module->size()) throw ValidationError("submodule generator out of range");
        gens.insert(g);
    }
    return submodule_generated(module, gens);
}

Submodule ideal_action_submodule(const Ideal& ideal, const Submodule& submodule) {
    const FiniteModule& mod = submodule.module();
    if (!same_ring(ideal.ring(), mod.ring()))
        throw MismatchError("ideal_action_submodule: ideal and module over different rings");
    ElementSet products(mod.size());
    const auto xs = submodule.members().members();
    for (auto a = ideal.members().first(); a; a = ideal.members().next_from(*a + 1))
        for (Index x : xs) products.insert(mod.act(*a, x));
    return submodule_generated(submodule.module_ptr(), products);
}

Submodule annihilator_in_module(const ElementSet& ring_subset, const ModulePtr& module) {
    const FiniteModule& mod = *module;
    if (ring_subset.universe() != mod.ring().size())
        throw MismatchError("annihilator_in_module: subset is not over the module's ring");
    const auto scalars = ring_subset.members();
    ElementSet killed(mod.size());
    for (Index x = 0; x < mod.size(); ++x) {
        bool all = true;
        for (Index a : scalars) {
            if (mod.act(a, x) != mod.zero()) {
                all = false;
                break;
            }
        }
        if (all) killed.insert(x);
    }
    return Submodule(module, std::move(killed), Submodule::Trusted{});
}

Submodule annihilator_in_module(const Ideal& ideal, const ModulePtr& module) {
    if (!same_ring(ideal.ring(), module->ring()))
        throw MismatchError("annihilator_in_module: ideal and module over different rings");
    return annihilator_in_module(ideal.members(), module);
}

Ideal annihilator_ideal_of_element(const ModulePtr& module, Index m) {
    const FiniteModule& mod = *module;
    if (m >= mod.size()) throw ValidationError("annihilator_ideal_of_element: element out of range");
    ElementSet ann(mod.ring().size());
    for (Index r = 0; r < mod.ring().size(); ++r)
        if (mod.act(r, m) == mod.zero()) ann.insert(r);
    // Ann(m) is an ideal: closed under + and under multiplication by R.
    return ideal_generated(mod.ring_ptr(), ann);
}

ElementSet zero_divisor_set(const FiniteModule& module) {
    require_nonzero(module, "zero_divisor_set");
    const FiniteRing& ring = module.ring();
    ElementSet z(ring.size());
    for (Index r = 0; r < ring.size(); ++r) {
        for (Index x = 0; x < module.size(); ++x) {
            if (x != module.zero() && module.act(r, x) == module.zero()) {
                z.insert(r);
                break;
            }
        }
    }
    return z;
}

std::vector<AssociatedPrime> associated_primes(const ModulePtr& module) {
    require_nonzero(*module, "associated_primes");
    std::vector<AssociatedPrime> out;
    for (Index m = 0; m < module->size(); ++m) {
        if (m == module->zero()) continue;
        Ideal ann = annihilator_ideal_of_element(module, m);
        auto seen = std::find_if(out.begin(), out.end(),
                                 [&](const AssociatedPrime& a) { return a.prime == ann; });
        if (seen != out.end()) continue;
        if (is_prime_ideal(ann).prime) out.push_back({std::move(ann), m});
    }
    std::sort(out.begin(), out.end(),
              [](const AssociatedPrime& a, const AssociatedPrime& b) { return a.prime < b.prime; });
    return out;
}

ElementSet scaled_module(const FiniteModule& module, Index r) {
    ElementSet out(module.size());
    for (Index x = 0; x < module.size(); ++x) out.insert(module.act(r, x));
    return out;
}

SubmoduleClassification classify_submodule(const Submodule& p) {
    const FiniteModule& mod = p.module();
    const FiniteRing& ring = mod.ring();
    SubmoduleClassification out;
    out.is_proper = p.size() != mod.size();
    if (!out.is_proper) {
        out.prime_violation = SubmoduleViolation{SubmoduleViolation::Kind::improper};
        out.primary_violation = SubmoduleViolation{SubmoduleViolation::Kind::improper};
        return out;
    }
    const std::size_t bound = ring.size();
    std::vector<char> scales_into(ring.size()), power_scales_into(ring.size());
    for (Index r = 0; r < ring.size(); ++r) {
        scales_into[r] = scaled_module(mod, r).is_subset_of(p.members());
        // r^n cycles within |R| steps, so n <= |R| is exhaustive.
        Index power = r;
        for (std::size_t n = 1; n <= bound && !power_scales_into[r]; ++n) {
            power_scales_into[r] = scaled_module(mod, power).is_subset_of(p.members());
            power = ring.mul(power, r);
        }
    }
    for (Index r = 0; r < ring.size(); ++r) {
        for (Index x = 0; x < mod.size(); ++x) {
            if (p.contains(x) || !p.contains(mod.act(r, x))) continue;
            if (!scales_into[r] && !out.prime_violation)
                out.prime_violation = SubmoduleViolation{SubmoduleViolation::Kind::prime, r, x, 1};
            if (!power_scales_into[r] && !out.primary_violation)
                out.primary_violation =
                    SubmoduleViolation{SubmoduleViolation::Kind::primary, r, x, bound};
        }
    }
    out.is_prime = !out.prime_violation;
    out.is_primary = !out.primary_violation;
    return out;
}

}  // namespace semimod
