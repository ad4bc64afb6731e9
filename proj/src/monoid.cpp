#include "semimod/monoid.hpp"

#include <algorithm>

#include "semimod/errors.hpp"

namespace semimod {

std::string to_string(const MonoidElement& e) {
    if (e.dim() == 1) return std::to_string(e[0]);
    std::string s = "(";
    for (std::size_t k = 0; k < e.dim(); ++k) s += (k ? "," : "") + std::to_string(e[k]);
    return s + ")";
}

Monoid::Monoid(Table cayley, Index identity, std::string label)
    : kind_(Kind::finite), cayley_(std::move(cayley)), identity_(identity), label_(std::move(label)) {
    if (!audit_monoid(*this))
        content_hypotheses_ = is_cancellative(*this).cancellative && is_torsion_free(*this).torsion_free;
}

Monoid::Monoid(std::size_t dim, std::string label)
    : kind_(Kind::affine), dim_(dim), label_(std::move(label)) {}

MonoidElement Monoid::identity() const {
    if (is_finite()) return MonoidElement::index(identity_);
    return MonoidElement(MonoidElement::Coords(dim_, 0));
}

bool Monoid::contains(const MonoidElement& e) const {
    if (is_finite()) return e.dim() == 1 && e[0] >= 0 && static_cast<std::size_t>(e[0]) < order();
    return e.dim() == dim_ && std::all_of(e.coords().begin(), e.coords().end(), [](std::int64_t c) { return c >= 0; });
}

MonoidElement Monoid::add(const MonoidElement& s, const MonoidElement& t) const {
    if (!contains(s) || !contains(t))
        throw MismatchError("monoid_add: element " + to_string(contains(s) ? t : s) +
                            " does not belong to monoid '" + label_ + "'");
    if (is_finite()) return MonoidElement::index(cayley_(s.as_index(), t.as_index()));
    MonoidElement::Coords c(dim_);
    for (std::size_t k = 0; k < dim_; ++k) c[k] = s[k] + t[k];
    return MonoidElement(std::move(c));
}

MonoidElement Monoid::multiple(const MonoidElement& s, std::size_t n) const {
    MonoidElement acc = identity();
    for (std::size_t i = 0; i < n; ++i) acc = add(acc, s);
    return acc;
}

std::vector<MonoidElement> Monoid::elements() const {
    if (!is_finite()) throw ValidationError("monoid '" + label_ + "' is infinite");
    std::vector<MonoidElement> out;
    out.reserve(order());
    for (Index i = 0; i < order(); ++i) out.push_back(MonoidElement::index(i));
    return out;
}

bool Monoid::same_structure(const Monoid& other) const {
    if (kind_ != other.kind_) return false;
    if (is_finite()) return identity_ == other.identity_ && cayley_ == other.cayley_;
    return dim_ == other.dim_;
}

std::optional<AxiomFailure> audit_monoid(const Monoid& monoid) {
    if (!monoid.is_finite()) {
        if (monoid.dim() == 0) return AxiomFailure{"affine dimension positive", {}};
        return std::nullopt;
    }
    const Table& c = monoid.cayley();
    const std::size_t n = c.rows();
    if (n == 0 || c.cols() != n) return AxiomFailure{"square nonempty Cayley table", {}};
    const Index e = monoid.identity_index();
    if (e >= n) return AxiomFailure{"identity in range", {e}};
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (c(a, b) >= n) return AxiomFailure{"Cayley entry in range", {a, b}};
    for (Index a = 0; a < n; ++a) {
        if (c(e, a) != a) return AxiomFailure{"identity", {a}};
        for (Index b = 0; b < n; ++b)
            if (c(a, b) != c(b, a)) return AxiomFailure{"commutativity", {a, b}};
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index d = 0; d < n; ++d)
                if (c(c(a, b), d) != c(a, c(b, d))) return AxiomFailure{"associativity", {a, b, d}};
    return std::nullopt;
}

MonoidPtr make_table_monoid(Table cayley, Index identity, std::string label) {
    auto m = std::make_shared<const Monoid>(std::move(cayley), identity, std::move(label));
    if (auto failure = audit_monoid(*m))
        throw ValidationError("monoid '" + m->label() + "': " + failure->describe());
    return m;
}

MonoidPtr build_free_monoid(std::size_t d) {
    if (d == 0) throw ValidationError("free monoid: dimension must be positive");
    return std::make_shared<const Monoid>(d, d == 1 ? "N" : "N^" + std::to_string(d));
}

MonoidPtr build_cyclic_group(std::size_t k) {
    if (k == 0) throw ValidationError("cyclic group: order must be positive");
    Table t(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) t(i, j) = static_cast<Index>((i + j) % k);
    return std::make_shared<const Monoid>(std::move(t), 0, "Z/" + std::to_string(k));
}

MonoidPtr build_saturating_monoid(std::size_t c) {
    if (c == 0) throw ValidationError("saturating monoid: cap must be positive");
    const std::size_t n = c + 1;
    Table t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) = static_cast<Index>(std::min(i + j, c));
    return std::make_shared<const Monoid>(std::move(t), 0, "sat(" + std::to_string(c) + ")");
}

MonoidElement monoid_add(const Monoid& monoid, const MonoidElement& s, const MonoidElement& t) {
    return monoid.add(s, t);
}

CancellativeCheck is_cancellative(const Monoid& monoid) {
    CancellativeCheck out;
    if (!monoid.is_finite()) return out;
    const Table& c = monoid.cayley();
    const std::size_t n = monoid.order();
    for (Index t = 0; t < n; ++t) {
        for (Index u = t + 1; u < n; ++u) {
            for (Index s = 0; s < n; ++s) {
                if (c(s, t) == c(s, u)) {
                    out.cancellative = false;
                    out.witness = CancellationWitness{MonoidElement::index(s), MonoidElement::index(t),
                                                      MonoidElement::index(u)};
                    return out;
                }
            }
        }
    }
    return out;
}

std::optional<std::size_t> torsion_order(const Monoid& monoid, const MonoidElement& s,
                                         const MonoidElement& t) {
    if (s == t) return 1;
    if (!monoid.is_finite()) return std::nullopt;
    const std::size_t bound = monoid.order() * monoid.order();
    MonoidElement ks = s, kt = t;
    for (std::size_t k = 1; k <= bound; ++k) {
        if (ks == kt) return k;
        ks = monoid.add(ks, s);
        kt = monoid.add(kt, t);
    }
    return std::nullopt;
}

TorsionFreeCheck is_torsion_free(const Monoid& monoid) {
    TorsionFreeCheck out;
    if (!monoid.is_finite()) return out;
    const std::size_t n = monoid.order();
    const Index e = monoid.identity_index();
    // A pair (e, t) is reported as (t, e); identity never leads.
    for (Index s = 0; s < n; ++s) {
        if (s == e) continue;
        for (Index t = 0; t < n; ++t) {
            if (s == t) continue;
            const auto se = MonoidElement::index(s);
            const auto te = MonoidElement::index(t);
            if (auto k = torsion_order(monoid, se, te)) {
                out.torsion_free = false;
                out.witness = TorsionWitness{se, te, *k};
                return out;
            }
        }
    }
    return out;
}

bool satisfies_content_hypotheses(const Monoid& monoid) {
    return monoid.satisfies_content_hypotheses();
}

}  // namespace semimod
