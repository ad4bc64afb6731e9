#include "semimod/ring.hpp"

#include <algorithm>
#include <numeric>

#include "semimod/errors.hpp"

namespace semimod {

namespace {

// Derived constructors re-audit only while the cubic scan stays cheap.
constexpr std::size_t kAuditLimit = 256;

void require_size(std::size_t n, std::size_t cap, const std::string& what) {
    if (n == 0) throw ValidationError(what + ": structure must have at least one element");
    if (n > cap) {
        throw SizeError(what + ": " + std::to_string(n) + " elements exceeds cap " +
                        std::to_string(cap));
    }
}

bool is_prime_number(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_or_throw(const FiniteRing& ring) {
    if (auto failure = audit_ring(ring)) {
        throw ValidationError("ring '" + ring.label() + "': " + failure->describe());
    }
}

}  // namespace

FiniteRing::FiniteRing(Table add, Table mul, Index zero, Index one, std::string label,
                       std::vector<std::string> names)
    : add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      label_(std::move(label)),
      names_(std::move(names)),
      neg_(add_.rows(), zero) {
    const std::size_t n = add_.rows();
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            if (add_(a, b) == zero_) {
                neg_[a] = b;
                break;
            }
        }
    }
}

Index FiniteRing::pow(Index a, std::size_t n) const {
    Index result = one_;
    for (std::size_t i = 0; i < n; ++i) result = mul(result, a);
    return result;
}

std::string FiniteRing::name(Index a) const {
    return names_.empty() ? std::to_string(a) : names_[a];
}

std::optional<Index> FiniteRing::find(std::string_view name) const {
    for (Index a = 0; a < size(); ++a)
        if (this->name(a) == name) return a;
    return std::nullopt;
}

bool FiniteRing::same_structure(const FiniteRing& other) const {
    return zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ && mul_ == other.mul_;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) {
    return &a == &b || a.same_structure(b);
}

std::optional<AxiomFailure> audit_ring(const FiniteRing& ring) {
    const Table& add = ring.add_table();
    const Table& mul = ring.mul_table();
    const std::size_t n = add.rows();
    if (mul.rows() != n || mul.cols() != n) return AxiomFailure{"multiplication table shape", {}};
    if (auto failure = audit_abelian_group(add, ring.zero())) return failure;
    if (ring.one() >= n) return AxiomFailure{"one in range", {ring.one()}};
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (mul(a, b) >= n) return AxiomFailure{"multiplication entry in range", {a, b}};
    for (Index a = 0; a < n; ++a) {
        if (mul(ring.one(), a) != a || mul(a, ring.one()) != a)
            return AxiomFailure{"multiplicative identity", {a}};
        for (Index b = 0; b < n; ++b)
            if (mul(a, b) != mul(b, a)) return AxiomFailure{"multiplicative commutativity", {a, b}};
    }
    for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
            const Index ab = mul(a, b);
            for (Index c = 0; c < n; ++c) {
                if (mul(ab, c) != mul(a, mul(b, c)))
                    return AxiomFailure{"multiplicative associativity", {a, b, c}};
                if (mul(a, add(b, c)) != add(ab, mul(a, c)))
                    return AxiomFailure{"distributivity", {a, b, c}};
            }
        }
    }
    return std::nullopt;
}

RingPtr make_ring(Table add, Table mul, Index zero, Index one, std::string label,
                  std::vector<std::string> names, const Limits& limits) {
    require_size(add.rows(), limits.ring_cap, "ring '" + label + "'");
    if (!names.empty() && names.size() != add.rows())
        throw ValidationError("ring '" + label + "': element name count does not match size");
    auto ring = std::make_shared<const FiniteRing>(std::move(add), std::move(mul), zero, one,
                                                   std::move(label), std::move(names));
    check_or_throw(*ring);
    return ring;
}

RingPtr build_zmod(std::size_t n, std::size_t cap) {
    require_size(n, cap, "Z/" + std::to_string(n));
    Table add(n, n), mul(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            add(i, j) = static_cast<Index>((i + j) % n);
            mul(i, j) = static_cast<Index>((i * j) % n);
        }
    }
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    return std::make_shared<const FiniteRing>(std::move(add), std::move(mul), 0,
                                              static_cast<Index>(1 % n),
                                              "Z/" + std::to_string(n), std::move(names));
}

namespace {

using Exponents = std::vector<unsigned>;

std::vector<Exponents> monomials_of_degree(unsigned nvars, unsigned degree) {
    // Descending lexicographic: a^2 before ab before b^2.
    std::vector<Exponents> out;
    Exponents current(nvars, 0);
    auto rec = [&](auto&& self, unsigned var, unsigned remaining) -> void {
        if (var + 1 == nvars) {
            current[var] = remaining;
            out.push_back(current);
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            current[var] = e;
            self(self, var + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::string variable_name(unsigned nvars, unsigned v) {
    if (nvars == 1) return "x";
    if (nvars <= 26) return std::string(1, static_cast<char>('a' + v));
    return "x" + std::to_string(v + 1);
}

std::string monomial_name(const Exponents& e) {
    const unsigned nvars = static_cast<unsigned>(e.size());
    std::string s;
    for (unsigned v = 0; v < nvars; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty() && nvars > 26) s += "*";
        s += variable_name(nvars, v);
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

RingPtr build_truncated_poly_ring(unsigned p, unsigned nvars, unsigned degree_cap,
                                  std::size_t size_cap) {
    if (!is_prime_number(p)) throw ValidationError("truncated polynomial ring: p=" +
                                                   std::to_string(p) + " is not prime");
    if (nvars == 0 || degree_cap == 0)
        throw ValidationError("truncated polynomial ring: nvars and cap must be positive");

    std::vector<Exponents> basis;
    for (unsigned d = 0; d < degree_cap; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        basis.insert(basis.end(), layer.begin(), layer.end());
        if (basis.size() > 64) break;
    }
    const std::size_t dim = basis.size();
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (n > size_cap / p) {
            throw SizeError("truncated polynomial ring: " + std::to_string(p) + "^" +
                            std::to_string(dim) + " exceeds cap " + std::to_string(size_cap));
        }
        n *= p;
    }

    // Basis product table: index of e_i * e_j or -1 when truncated away.
    std::vector<int> basis_product(dim * dim, -1);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Exponents e(nvars);
            unsigned deg = 0;
            for (unsigned v = 0; v < nvars; ++v) {
                e[v] = basis[i][v] + basis[j][v];
                deg += e[v];
            }
            if (deg >= degree_cap) continue;
            auto it = std::find(basis.begin(), basis.end(), e);
            basis_product[i * dim + j] = static_cast<int>(it - basis.begin());
        }
    }

    auto digits = [&](std::size_t x) {
        std::vector<unsigned> d(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            d[k] = static_cast<unsigned>(x % p);
            x /= p;
        }
        return d;
    };
    auto encode = [&](const std::vector<unsigned>& d) {
        std::size_t x = 0;
        for (std::size_t k = dim; k-- > 0;) x = x * p + d[k];
        return static_cast<Index>(x);
    };

    Table add(n, n), mul(n, n);
    std::vector<std::vector<unsigned>> coords(n);
    for (std::size_t x = 0; x < n; ++x) coords[x] = digits(x);

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<unsigned> s(dim);
            for (std::size_t k = 0; k < dim; ++k) s[k] = (coords[x][k] + coords[y][k]) % p;
            add(x, y) = encode(s);
        }
    }

    // basis_times[k][y] = e_k * y; then x*y = sum_k x_k (e_k * y).
    std::vector<std::vector<unsigned>> basis_times(dim * n);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t y = 0; y < n; ++y) {
            std::vector<unsigned> prod(dim, 0);
            for (std::size_t j = 0; j < dim; ++j) {
                const int t = basis_product[k * dim + j];
                if (t >= 0) prod[t] = (prod[t] + coords[y][j]) % p;
            }
            basis_times[k * n + y] = std::move(prod);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x; y < n; ++y) {
            std::vector<unsigned> prod(dim, 0);
            for (std::size_t k = 0; k < dim; ++k) {
                const unsigned c = coords[x][k];
                if (c == 0) continue;
                const auto& row = basis_times[k * n + y];
                for (std::size_t t = 0; t < dim; ++t) prod[t] = (prod[t] + c * row[t]) % p;
            }
            mul(x, y) = mul(y, x) = encode(prod);
        }
    }

    std::vector<std::string> names(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::string s;
        for (std::size_t k = 0; k < dim; ++k) {
            const unsigned c = coords[x][k];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            const std::string mono = monomial_name(basis[k]);
            if (c == 1) s += mono;
            else if (mono == "1") s += std::to_string(c);
            else s += std::to_string(c) + mono;
        }
        names[x] = s.empty() ? "0" : s;
    }

    std::string label = "F" + std::to_string(p) + "[";
    for (unsigned v = 0; v < nvars; ++v) label += (v ? "," : "") + variable_name(nvars, v);
    label += "]/deg>=" + std::to_string(degree_cap);

    auto ring = std::make_shared<const FiniteRing>(std::move(add), std::move(mul), 0,
                                                   n > 1 ? 1 : 0, std::move(label),
                                                   std::move(names));
    if (n <= kAuditLimit) check_or_throw(*ring);
    return ring;
}

// ---------------------------------------------------------------------------
// Ideals

Ideal::Ideal(RingPtr ring, ElementSet members) : ring_(std::move(ring)), members_(std::move(members)) {
    const FiniteRing& r = *ring_;
    if (members_.universe() != r.size()) throw ValidationError("ideal: subset universe mismatch");
    if (!members_.contains(r.zero())) throw ValidationError("ideal: does not contain zero");
    const auto elems = members_.members();
    for (Index a : elems) {
        for (Index b : elems)
            if (!members_.contains(r.add(a, b)))
                throw ValidationError("ideal: not closed under addition at (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ")");
        for (Index x = 0; x < r.size(); ++x)
            if (!members_.contains(r.mul(x, a)))
                throw ValidationError("ideal: not closed under multiplication at (" +
                                      std::to_string(x) + ", " + std::to_string(a) + ")");
    }
}

Ideal Ideal::zero(RingPtr ring) {
    ElementSet s(ring->size());
    s.insert(ring->zero());
    return Ideal(std::move(ring), std::move(s), Trusted{});
}

Ideal Ideal::unit(RingPtr ring) {
    ElementSet s = ElementSet::full(ring->size());
    return Ideal(std::move(ring), std::move(s), Trusted{});
}

Ideal ideal_generated(const RingPtr& ring, const ElementSet& generators) {
    const FiniteRing& r = *ring;
    ElementSet multiples(r.size());
    for (auto g = generators.first(); g; g = generators.next_from(*g + 1))
        for (Index x = 0; x < r.size(); ++x) multiples.insert(r.mul(x, *g));
    return Ideal(ring, additive_closure(r.add_table(), r.zero(), multiples), Ideal::Trusted{});
}

Ideal ideal_generated(const RingPtr& ring, std::span<const Index> generators) {
    ElementSet gens(ring->size());
    for (Index g : generators) {
        if (g >= ring->size()) throw ValidationError("ideal generator out of range");
        gens.insert(g);
    }
    return ideal_generated(ring, gens);
}

namespace {
void require_same_ring(const Ideal& a, const Ideal& b, const char* op) {
    if (!same_ring(a.ring(), b.ring())) throw MismatchError(std::string(op) + ": ideals of different rings");
}
}  // namespace

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b, "ideal_product");
    const FiniteRing& r = a.ring();
    ElementSet products(r.size());
    const auto bm = b.members().members();
    for (auto x = a.members().first(); x; x = a.members().next_from(*x + 1))
        for (Index y : bm) products.insert(r.mul(*x, y));
    return ideal_generated(a.ring_ptr(), products);
}

Ideal ideal_power(const Ideal& ideal, std::size_t k) {
    Ideal result = Ideal::unit(ideal.ring_ptr());
    for (std::size_t i = 0; i < k; ++i) result = ideal_product(result, ideal);
    return result;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b, "ideal_sum");
    return ideal_generated(a.ring_ptr(), a.members() | b.members());
}

PrimeCheck is_prime_ideal(const Ideal& ideal) {
    PrimeCheck out;
    if (ideal.is_unit()) {
        out.proper = false;
        return out;
    }
    const FiniteRing& r = ideal.ring();
    for (Index a = 0; a < r.size(); ++a) {
        if (ideal.contains(a)) continue;
        for (Index b = a; b < r.size(); ++b) {
            if (ideal.contains(b)) continue;
            if (ideal.contains(r.mul(a, b))) {
                out.witness = std::make_pair(a, b);
                return out;
            }
        }
    }
    out.prime = true;
    return out;
}

AvoidanceResult prime_avoidance_locate(const Ideal& ideal, std::span<const Ideal> primes) {
    AvoidanceResult out;
    ElementSet cover(ideal.ring().size());
    for (const Ideal& p : primes) {
        require_same_ring(ideal, p, "prime_avoidance_locate");
        if (!is_prime_ideal(p).prime) throw ValidationError("prime_avoidance_locate: list contains a non-prime ideal");
        cover |= p.members();
    }
    if (auto outside = ideal.members().minus(cover).first()) {
        out.uncovered = *outside;
        return out;
    }
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (ideal.is_subset_of(primes[i])) {
            out.index = i;
            return out;
        }
    }
    throw InvariantViolation("prime_avoidance_locate: ideal covered by a union of primes but by none of them");
}

std::vector<Ideal> maximal_ideals_within(const RingPtr& ring, const ElementSet& region) {
    std::vector<Ideal> found;
    const auto candidates = region.members();
    for (Index z : candidates) {
        const Index gen[] = {z};
        Ideal current = ideal_generated(ring, std::span<const Index>(gen));
        if (!current.members().is_subset_of(region)) continue;
        for (Index w : candidates) {
            if (current.contains(w)) continue;
            ElementSet gens = current.members();
            gens.insert(w);
            Ideal grown = ideal_generated(ring, gens);
            if (grown.members().is_subset_of(region)) current = std::move(grown);
        }
        if (std::find(found.begin(), found.end(), current) == found.end())
            found.push_back(std::move(current));
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Ideal> prime_ideals(const RingPtr& ring) {
    if (ring->is_zero_ring()) return {};
    // Non-units of a finite ring are exactly its zero-divisors, the union of
    // the maximal ideals.
    ElementSet nonunits(ring->size());
    for (Index a = 0; a < ring->size(); ++a) {
        bool unit = false;
        for (Index b = 0; b < ring->size() && !unit; ++b) unit = ring->mul(a, b) == ring->one();
        if (!unit) nonunits.insert(a);
    }
    std::vector<Ideal> primes;
    for (Ideal& m : maximal_ideals_within(ring, nonunits))
        if (is_prime_ideal(m).prime) primes.push_back(std::move(m));
    return primes;
}

CosetPartition coset_partition(const Table& add, const ElementSet& subgroup) {
    const std::size_t n = add.rows();
    constexpr Index kUnassigned = ~Index{0};
    CosetPartition out;
    out.class_of.assign(n, kUnassigned);
    const auto members = subgroup.members();
    for (Index x = 0; x < n; ++x) {
        if (out.class_of[x] != kUnassigned) continue;
        const auto id = static_cast<Index>(out.representative.size());
        out.representative.push_back(x);
        for (Index a : members) out.class_of[add(x, a)] = id;
    }
    return out;
}

RingPtr quotient_ring(const Ideal& ideal) {
    const FiniteRing& r = ideal.ring();
    const CosetPartition cosets = coset_partition(r.add_table(), ideal.members());
    const std::size_t q = cosets.representative.size();
    Table add(q, q), mul(q, q);
    for (Index i = 0; i < q; ++i) {
        for (Index j = 0; j < q; ++j) {
            const Index a = cosets.representative[i];
            const Index b = cosets.representative[j];
            add(i, j) = cosets.class_of[r.add(a, b)];
            mul(i, j) = cosets.class_of[r.mul(a, b)];
        }
    }
    std::vector<std::string> names(q);
    for (Index i = 0; i < q; ++i) names[i] = r.name(cosets.representative[i]);
    std::string label = r.label() + "/(";
    const auto gens = ideal.members().members();
    for (std::size_t k = 0; k < gens.size() && k < 8; ++k) label += (k ? "," : "") + r.name(gens[k]);
    label += gens.size() > 8 ? ",...)" : ")";
    auto out = std::make_shared<const FiniteRing>(std::move(add), std::move(mul),
                                                  cosets.class_of[r.zero()],
                                                  cosets.class_of[r.one()], std::move(label),
                                                  std::move(names));
    if (q <= kAuditLimit) check_or_throw(*out);
    return out;
}

}  // namespace semimod
