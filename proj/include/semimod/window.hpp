#pragma once

// Finite slices of R[S] and M[S]: every coefficient assignment over a fixed
// list of exponents.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "semimod/module.hpp"
#include "semimod/monoid.hpp"
#include "semimod/ring.hpp"
#include "semimod/series.hpp"

namespace semimod {

struct SupportWindow {
    std::vector<MonoidElement> exponents;
    // At most this many nonzero terms, when set.
    std::optional<std::size_t> max_support;
};

// Throws ValidationError for repeated exponents or exponents outside S.
void validate_window(const SupportWindow& window, const Monoid& monoid);

// {0,1,2} for N; nonnegative vectors of total degree <= 2 for N^d; every
// element of a finite monoid.
SupportWindow default_window(const Monoid& monoid);

// Number of series in the window over a coefficient space of the given size.
// Saturates at UINT64_MAX.
std::uint64_t window_cardinality(const SupportWindow& window, std::size_t coefficient_count);

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

// Visits every window series in canonical order: coefficient tuples
// (c_0, ..., c_{e-1}) ascending lexicographically, c_0 most significant.
void for_each_window_series(const RingPtr& ring, const MonoidPtr& monoid,
                            const SupportWindow& window,
                            const std::function<void(const Series&)>& visit);
void for_each_window_series(const ModulePtr& module, const MonoidPtr& monoid,
                            const SupportWindow& window,
                            const std::function<void(const Series&)>& visit);

std::vector<Series> window_series(const RingPtr& ring, const MonoidPtr& monoid,
                                  const SupportWindow& window);
std::vector<Series> window_series(const ModulePtr& module, const MonoidPtr& monoid,
                                  const SupportWindow& window);

}  // namespace semimod
