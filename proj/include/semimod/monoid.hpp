#pragma once

// Commutative monoids: finite Cayley tables, or affine monoids inside Z^d.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "semimod/element_set.hpp"
#include "semimod/table.hpp"

namespace semimod {

// Finite monoids use a single coordinate holding the table index; affine
// monoids of dimension d use d integer coordinates.
class MonoidElement {
public:
    using Coords = boost::container::small_vector<std::int64_t, 3>;

    MonoidElement() = default;
    explicit MonoidElement(Coords coords) : coords_(std::move(coords)) {}
    MonoidElement(std::initializer_list<std::int64_t> coords) : coords_(coords) {}
    static MonoidElement index(Index i) { return MonoidElement{static_cast<std::int64_t>(i)}; }

    const Coords& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    std::int64_t operator[](std::size_t k) const { return coords_[k]; }
    Index as_index() const { return static_cast<Index>(coords_[0]); }

    friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
    friend std::strong_ordering operator<=>(const MonoidElement& a, const MonoidElement& b) {
        return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                      b.coords_.begin(), b.coords_.end());
    }

private:
    Coords coords_;
};

std::string to_string(const MonoidElement& e);

class Monoid;
using MonoidPtr = std::shared_ptr<const Monoid>;

class Monoid {
public:
    enum class Kind { finite, affine };

    // Unchecked constructors; use build_monoid / make_table_monoid.
    Monoid(Table cayley, Index identity, std::string label);
    Monoid(std::size_t dim, std::string label);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    const std::string& label() const { return label_; }

    // Finite variant.
    std::size_t order() const { return cayley_.rows(); }
    const Table& cayley() const { return cayley_; }
    Index identity_index() const { return identity_; }
    // Affine variant.
    std::size_t dim() const { return dim_; }

    MonoidElement identity() const;
    bool contains(const MonoidElement& e) const;
    MonoidElement add(const MonoidElement& s, const MonoidElement& t) const;
    // n s, with 0 s = identity.
    MonoidElement multiple(const MonoidElement& s, std::size_t n) const;

    // Every element, in canonical order (finite variant only).
    std::vector<MonoidElement> elements() const;

    bool same_structure(const Monoid& other) const;

    // Cancellative and torsion-free; evaluated once at construction.
    bool satisfies_content_hypotheses() const { return content_hypotheses_; }

private:
    Kind kind_;
    Table cayley_;
    Index identity_ = 0;
    std::size_t dim_ = 0;
    std::string label_;
    bool content_hypotheses_ = true;
};

std::optional<AxiomFailure> audit_monoid(const Monoid& monoid);

MonoidPtr make_table_monoid(Table cayley, Index identity, std::string label = "table");
// N^d, as an affine monoid of dimension d.
MonoidPtr build_free_monoid(std::size_t d);
// Additive Z/k.
MonoidPtr build_cyclic_group(std::size_t k);
// {0..c} with s + t = min(s + t, c).
MonoidPtr build_saturating_monoid(std::size_t c);

MonoidElement monoid_add(const Monoid& monoid, const MonoidElement& s, const MonoidElement& t);

struct CancellationWitness {
    MonoidElement s, t, u;  // s + t = s + u, t != u
};
struct CancellativeCheck {
    bool cancellative = true;
    std::optional<CancellationWitness> witness;
};
// Witness minimal in (t, u, s) order.
CancellativeCheck is_cancellative(const Monoid& monoid);

struct TorsionWitness {
    MonoidElement s, t;  // s != t, n s = n t
    std::size_t n = 0;
};
struct TorsionFreeCheck {
    bool torsion_free = true;
    std::optional<TorsionWitness> witness;
};
// Search bound n <= order^2; witness minimal over s != identity, then t, then n.
TorsionFreeCheck is_torsion_free(const Monoid& monoid);

// Least k >= 1 with k s = k t, searched up to order^2; none for affine s != t.
std::optional<std::size_t> torsion_order(const Monoid& monoid, const MonoidElement& s,
                                         const MonoidElement& t);

// Cancellative and torsion-free.
bool satisfies_content_hypotheses(const Monoid& monoid);

}  // namespace semimod
