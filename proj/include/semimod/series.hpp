#pragma once

// Elements of the semigroup ring R[S] and the semigroup module M[S]:
// finitely supported maps S -> R (or S -> M), kept normalized.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semimod/module.hpp"
#include "semimod/monoid.hpp"
#include "semimod/ring.hpp"

namespace semimod {

struct Term {
    MonoidElement exponent;
    Index coefficient;

    friend bool operator==(const Term&, const Term&) = default;
};

class Series {
public:
    // Terms may repeat exponents and carry zeros; both are normalized away.
    static Series over_ring(RingPtr ring, MonoidPtr monoid, std::vector<Term> terms);
    static Series over_module(ModulePtr module, MonoidPtr monoid, std::vector<Term> terms);
    // c X^s
    static Series monomial_over_ring(RingPtr ring, MonoidPtr monoid, Index c, MonoidElement s);
    static Series monomial_over_module(ModulePtr module, MonoidPtr monoid, Index c, MonoidElement s);

    bool over_module() const { return module_ != nullptr; }
    const FiniteRing& ring() const { return *ring_; }
    const RingPtr& ring_ptr() const { return ring_; }
    // Null for ring series.
    const ModulePtr& module_ptr() const { return module_; }
    const Monoid& monoid() const { return *monoid_; }
    const MonoidPtr& monoid_ptr() const { return monoid_; }

    // Sorted by exponent, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Index coefficient_at(const MonoidElement& s) const;
    // Coefficients as a subset of the coefficient space.
    ElementSet coefficient_set() const;

    std::size_t space_size() const;
    Index space_zero() const;

    Series operator+(const Series& other) const;
    Series operator-() const;
    Series operator-(const Series& other) const { return *this + (-other); }

    friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    Series(RingPtr ring, ModulePtr module, MonoidPtr monoid, std::vector<Term> terms);
    Index add(Index a, Index b) const;
    Index neg(Index a) const;
    void normalize();
    void require_compatible(const Series& other, const char* op) const;

    RingPtr ring_;
    ModulePtr module_;
    MonoidPtr monoid_;
    std::vector<Term> terms_;
};

// Convolution f h; f must be a ring series, h a ring or module series.
Series series_multiply(const Series& f, const Series& h);

// f . m: f acting on the constant module series m X^0.
Series series_act_on_element(const Series& f, const ModulePtr& module, Index m);
// Every coefficient of f kills m (equivalently f . m = 0).
bool annihilates_element(const Series& f, const FiniteModule& module, Index m);

Ideal content_ideal(const Series& f);
Submodule content_submodule(const Series& g);
std::variant<Ideal, Submodule> content(const Series& h);

struct DMStep {
    std::size_t k;
    Submodule lhs;  // c(f)^k c(g)
    Submodule rhs;  // c(f)^(k-1) c(fg)
    bool equal;
};

struct DMResult {
    std::optional<std::size_t> k_min;  // empty: cap exceeded (inconclusive)
    std::vector<DMStep> chain;
    std::size_t cap_used = 0;
};

// Minimal k >= 1 with c(f)^k c(g) = c(f)^(k-1) c(fg).  Default cap is
// |support(g)| + 1.  Throws HypothesisError unless S is cancellative and
// torsion-free.
DMResult dedekind_mertens_exponent(const Series& f, const Series& g,
                                   std::optional<std::size_t> cap = std::nullopt);

// Nonzero m with f . m = 0, for fg = 0 and g != 0.
Index mccoy_witness(const Series& f, const Series& g);

struct ZeroDivisorTest {
    bool zero_divisor = false;
    std::optional<Index> witness;  // nonzero m with f . m = 0
    Submodule annihilator;         // Ann_M(c(f))
};

// Decides f in Z_{R[S]}(M[S]) through Ann_M(c(f)).
ZeroDivisorTest is_zero_divisor_series(const Series& f, const ModulePtr& module);

// p[S]: series whose coefficients all lie in p.
struct ExtendedIdeal {
    Ideal base;
    MonoidPtr monoid;
};
bool extended_ideal_membership(const Series& f, const ExtendedIdeal& p);

struct NonCancellativeCounterexample {
    Series f;  // X^s
    Series g;  // q X^t - q X^u
};
NonCancellativeCounterexample build_noncancellative_counterexample(const MonoidPtr& monoid,
                                                                   const CancellationWitness& w,
                                                                   const ModulePtr& module, Index q);

struct TorsionCounterexample {
    std::size_t k;
    Series h;  // sum_{i<k} X^{(k-i-1)s + it}
    Series g;  // q X^s - q X^t
};
TorsionCounterexample build_torsion_counterexample(const MonoidPtr& monoid, const MonoidElement& s,
                                                   const MonoidElement& t, const ModulePtr& module,
                                                   Index q);

}  // namespace semimod
