#include "semimod/series.hpp"

#include <algorithm>

#include "semimod/errors.hpp"

namespace semimod {

namespace {

void require_hypotheses(const Monoid& monoid, const char* op) {
    if (!monoid.satisfies_content_hypotheses())
        throw HypothesisError(std::string(op) + ": monoid '" + monoid.label() +
                              "' is not cancellative and torsion-free");
}

void require_same_monoid(const Monoid& a, const Monoid& b, const char* op) {
    if (&a != &b && !a.same_structure(b))
        throw MismatchError(std::string(op) + ": series over different monoids");
}

}  // namespace

Series::Series(RingPtr ring, ModulePtr module, MonoidPtr monoid, std::vector<Term> terms)
    : ring_(std::move(ring)), module_(std::move(module)), monoid_(std::move(monoid)),
      terms_(std::move(terms)) {
    const std::size_t n = space_size();
    for (const Term& t : terms_) {
        if (!monoid_->contains(t.exponent))
            throw ValidationError("series: exponent " + semimod::to_string(t.exponent) +
                                  " is not an element of monoid '" + monoid_->label() + "'");
        if (t.coefficient >= n)
            throw ValidationError("series: coefficient " + std::to_string(t.coefficient) +
                                  " out of range");
    }
    normalize();
}

Series Series::over_ring(RingPtr ring, MonoidPtr monoid, std::vector<Term> terms) {
    return Series(std::move(ring), nullptr, std::move(monoid), std::move(terms));
}

Series Series::over_module(ModulePtr module, MonoidPtr monoid, std::vector<Term> terms) {
    RingPtr ring = module->ring_ptr();
    return Series(std::move(ring), std::move(module), std::move(monoid), std::move(terms));
}

Series Series::monomial_over_ring(RingPtr ring, MonoidPtr monoid, Index c, MonoidElement s) {
    return over_ring(std::move(ring), std::move(monoid), {Term{std::move(s), c}});
}

Series Series::monomial_over_module(ModulePtr module, MonoidPtr monoid, Index c, MonoidElement s) {
    return over_module(std::move(module), std::move(monoid), {Term{std::move(s), c}});
}

std::size_t Series::space_size() const { return module_ ? module_->size() : ring_->size(); }
Index Series::space_zero() const { return module_ ? module_->zero() : ring_->zero(); }
Index Series::add(Index a, Index b) const { return module_ ? module_->add(a, b) : ring_->add(a, b); }
Index Series::neg(Index a) const { return module_ ? module_->neg(a) : ring_->neg(a); }

void Series::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().exponent == t.exponent)
            merged.back().coefficient = add(merged.back().coefficient, t.coefficient);
        else
            merged.push_back(std::move(t));
    }
    const Index zero = space_zero();
    std::erase_if(merged, [zero](const Term& t) { return t.coefficient == zero; });
    terms_ = std::move(merged);
}

Index Series::coefficient_at(const MonoidElement& s) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const Term& t, const MonoidElement& e) { return t.exponent < e; });
    return (it != terms_.end() && it->exponent == s) ? it->coefficient : space_zero();
}

ElementSet Series::coefficient_set() const {
    ElementSet out(space_size());
    for (const Term& t : terms_) out.insert(t.coefficient);
    return out;
}

void Series::require_compatible(const Series& other, const char* op) const {
    require_same_monoid(*monoid_, *other.monoid_, op);
    if (over_module() != other.over_module())
        throw MismatchError(std::string(op) + ": ring series combined with module series");
    if (module_ ? !same_module(*module_, *other.module_) : !same_ring(*ring_, *other.ring_))
        throw MismatchError(std::string(op) + ": series over different coefficient spaces");
}

Series Series::operator+(const Series& other) const {
    require_compatible(other, "series addition");
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return Series(ring_, module_, monoid_, std::move(all));
}

Series Series::operator-() const {
    std::vector<Term> negated = terms_;
    for (Term& t : negated) t.coefficient = neg(t.coefficient);
    return Series(ring_, module_, monoid_, std::move(negated));
}

std::string Series::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const Term& t : terms_) {
        if (!s.empty()) s += " + ";
        const std::string c = module_ ? module_->name(t.coefficient) : ring_->name(t.coefficient);
        s += (c.find('+') != std::string::npos ? "(" + c + ")" : c) + "*X^" +
             semimod::to_string(t.exponent);
    }
    return s;
}

Series series_multiply(const Series& f, const Series& h) {
    if (f.over_module()) throw MismatchError("series_multiply: left factor must be a ring series");
    if (!same_ring(f.ring(), h.ring()))
        throw MismatchError("series_multiply: factors over different rings");
    require_same_monoid(f.monoid(), h.monoid(), "series_multiply");
    const Monoid& monoid = f.monoid();
    std::vector<Term> products;
    products.reserve(f.support_size() * h.support_size());
    const FiniteRing& ring = f.ring();
    for (const Term& a : f.terms()) {
        for (const Term& b : h.terms()) {
            const Index c = h.over_module() ? h.module_ptr()->act(a.coefficient, b.coefficient)
                                            : ring.mul(a.coefficient, b.coefficient);
            if (c == h.space_zero()) continue;
            products.push_back(Term{monoid.add(a.exponent, b.exponent), c});
        }
    }
    if (h.over_module()) return Series::over_module(h.module_ptr(), h.monoid_ptr(), std::move(products));
    return Series::over_ring(h.ring_ptr(), h.monoid_ptr(), std::move(products));
}

Series series_act_on_element(const Series& f, const ModulePtr& module, Index m) {
    if (m >= module->size()) throw ValidationError("series_act_on_element: element out of range");
    return series_multiply(f, Series::monomial_over_module(module, f.monoid_ptr(), m,
                                                           f.monoid().identity()));
}

bool annihilates_element(const Series& f, const FiniteModule& module, Index m) {
    for (const Term& t : f.terms())
        if (module.act(t.coefficient, m) != module.zero()) return false;
    return true;
}

Ideal content_ideal(const Series& f) {
    if (f.over_module()) throw MismatchError("content_ideal: module series");
    return ideal_generated(f.ring_ptr(), f.coefficient_set());
}

Submodule content_submodule(const Series& g) {
    if (!g.over_module()) throw MismatchError("content_submodule: ring series");
    return submodule_generated(g.module_ptr(), g.coefficient_set());
}

std::variant<Ideal, Submodule> content(const Series& h) {
    if (h.over_module()) return content_submodule(h);
    return content_ideal(h);
}

DMResult dedekind_mertens_exponent(const Series& f, const Series& g, std::optional<std::size_t> cap) {
    if (!g.over_module()) throw MismatchError("dedekind_mertens_exponent: g must be a module series");
    require_hypotheses(f.monoid(), "dedekind_mertens_exponent");
    const Series fg = series_multiply(f, g);
    const Ideal cf = content_ideal(f);

    DMResult out;
    out.cap_used = cap.value_or(g.support_size() + 1);
    // lhs_k = c(f) lhs_{k-1}, rhs_k = c(f) rhs_{k-1}; lhs_1 = c(f)c(g), rhs_1 = c(fg).
    Submodule lhs = ideal_action_submodule(cf, content_submodule(g));
    Submodule rhs = content_submodule(fg);
    for (std::size_t k = 1; k <= out.cap_used; ++k) {
        if (k > 1) {
            lhs = ideal_action_submodule(cf, lhs);
            rhs = ideal_action_submodule(cf, rhs);
        }
        const bool equal = lhs == rhs;
        out.chain.push_back(DMStep{k, lhs, rhs, equal});
        if (equal) {
            out.k_min = k;
            break;
        }
    }
    return out;
}

Index mccoy_witness(const Series& f, const Series& g) {
    if (!g.over_module()) throw MismatchError("mccoy_witness: g must be a module series");
    require_hypotheses(f.monoid(), "mccoy_witness");
    if (g.is_zero()) throw ValidationError("mccoy_witness: g is zero");
    if (!series_multiply(f, g).is_zero()) throw ValidationError("mccoy_witness: fg is not zero");

    const FiniteModule& module = *g.module_ptr();
    const Ideal cf = content_ideal(f);
    // previous = c(f)^(t-1) c(g); stop at the first t with c(f)^t c(g) = 0.
    Submodule previous = content_submodule(g);
    for (std::size_t t = 1; t <= module.size() + 1; ++t) {
        Submodule next = ideal_action_submodule(cf, previous);
        if (next.is_zero()) {
            ElementSet nonzero = previous.members();
            nonzero.erase(module.zero());
            const Index m = *nonzero.first();
            if (!series_act_on_element(f, g.module_ptr(), m).is_zero())
                throw InvariantViolation("mccoy_witness: f . m != 0 for the constructed m");
            return m;
        }
        if (next == previous) break;
        previous = std::move(next);
    }
    throw InvariantViolation("mccoy_witness: c(f)^t c(g) never vanishes although fg = 0");
}

ZeroDivisorTest is_zero_divisor_series(const Series& f, const ModulePtr& module) {
    if (f.over_module()) throw MismatchError("is_zero_divisor_series: f must be a ring series");
    if (!same_ring(f.ring(), module->ring()))
        throw MismatchError("is_zero_divisor_series: f and module over different rings");
    require_hypotheses(f.monoid(), "is_zero_divisor_series");
    if (module->is_zero_module())
        throw DegenerateInputError("is_zero_divisor_series: zero module");

    ZeroDivisorTest out{false, std::nullopt, annihilator_in_module(f.coefficient_set(), module)};
    ElementSet nonzero = out.annihilator.members();
    nonzero.erase(module->zero());
    if (auto m = nonzero.first()) {
        if (!series_act_on_element(f, module, *m).is_zero())
            throw InvariantViolation("is_zero_divisor_series: annihilator element does not kill f");
        out.zero_divisor = true;
        out.witness = *m;
    }
    return out;
}

bool extended_ideal_membership(const Series& f, const ExtendedIdeal& p) {
    if (f.over_module()) throw MismatchError("extended_ideal_membership: f must be a ring series");
    if (!same_ring(f.ring(), p.base.ring()))
        throw MismatchError("extended_ideal_membership: different rings");
    require_same_monoid(f.monoid(), *p.monoid, "extended_ideal_membership");
    for (const Term& t : f.terms())
        if (!p.base.contains(t.coefficient)) return false;
    return true;
}

NonCancellativeCounterexample build_noncancellative_counterexample(const MonoidPtr& monoid,
                                                                   const CancellationWitness& w,
                                                                   const ModulePtr& module, Index q) {
    if (w.t == w.u) throw ValidationError("noncancellative counterexample: t = u");
    if (monoid->add(w.s, w.t) != monoid->add(w.s, w.u))
        throw ValidationError("noncancellative counterexample: s + t != s + u");
    if (q >= module->size() || q == module->zero())
        throw ValidationError("noncancellative counterexample: q must be a nonzero module element");

    const RingPtr& ring = module->ring_ptr();
    Series f = Series::monomial_over_ring(ring, monoid, ring->one(), w.s);
    Series g = Series::over_module(module, monoid,
                                   {Term{w.t, q}, Term{w.u, module->neg(q)}});
    if (g.is_zero() || !series_multiply(f, g).is_zero())
        throw InvariantViolation("noncancellative counterexample: X^s (qX^t - qX^u) != 0");
    for (Index m = 0; m < module->size(); ++m) {
        if (m == module->zero()) continue;
        if (series_act_on_element(f, module, m).is_zero())
            throw InvariantViolation("noncancellative counterexample: X^s kills a nonzero m");
    }
    return {std::move(f), std::move(g)};
}

TorsionCounterexample build_torsion_counterexample(const MonoidPtr& monoid, const MonoidElement& s,
                                                   const MonoidElement& t, const ModulePtr& module,
                                                   Index q) {
    if (s == t) throw ValidationError("torsion counterexample: s = t");
    if (!is_cancellative(*monoid).cancellative)
        throw HypothesisError("torsion counterexample: monoid '" + monoid->label() +
                              "' is not cancellative");
    if (q >= module->size() || q == module->zero())
        throw ValidationError("torsion counterexample: q must be a nonzero module element");
    const auto k = torsion_order(*monoid, s, t);
    if (!k) throw ValidationError("torsion counterexample: no k with ks = kt within the search bound");

    const RingPtr& ring = module->ring_ptr();
    std::vector<Term> h_terms;
    for (std::size_t i = 0; i < *k; ++i) {
        MonoidElement e = monoid->add(monoid->multiple(s, *k - i - 1), monoid->multiple(t, i));
        h_terms.push_back(Term{std::move(e), ring->one()});
    }
    Series h = Series::over_ring(ring, monoid, std::move(h_terms));
    if (h.support_size() != *k)
        throw InvariantViolation("torsion counterexample: exponents of h are not distinct");
    Series g = Series::over_module(module, monoid, {Term{s, q}, Term{t, module->neg(q)}});
    if (g.is_zero() || !series_multiply(h, g).is_zero())
        throw InvariantViolation("torsion counterexample: h (qX^s - qX^t) != 0");
    return {*k, std::move(h), std::move(g)};
}

}  // namespace semimod
