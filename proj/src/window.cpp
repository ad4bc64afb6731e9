#include "semimod/window.hpp"

#include <algorithm>
#include <limits>

#include "semimod/errors.hpp"

namespace semimod {

void validate_window(const SupportWindow& window, const Monoid& monoid) {
    for (std::size_t i = 0; i < window.exponents.size(); ++i) {
        if (!monoid.contains(window.exponents[i]))
            throw ValidationError("window exponent " + to_string(window.exponents[i]) +
                                  " is not an element of monoid '" + monoid.label() + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (window.exponents[i] == window.exponents[j])
                throw ValidationError("window exponent " + to_string(window.exponents[i]) +
                                      " repeated");
    }
}

SupportWindow default_window(const Monoid& monoid) {
    SupportWindow w;
    if (monoid.is_finite()) {
        w.exponents = monoid.elements();
        return w;
    }
    const std::size_t d = monoid.dim();
    MonoidElement::Coords c(d, 0);
    auto rec = [&](auto&& self, std::size_t k, std::int64_t remaining) -> void {
        if (k == d) {
            w.exponents.emplace_back(c);
            return;
        }
        for (std::int64_t e = 0; e <= remaining; ++e) {
            c[k] = e;
            self(self, k + 1, remaining - e);
        }
        c[k] = 0;
    };
    rec(rec, 0, 2);
    std::sort(w.exponents.begin(), w.exponents.end());
    return w;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max()
                                                             : a + b;
}

template <typename Make>
void enumerate(std::size_t q, Index zero, const SupportWindow& window, const Make& make,
               const std::function<void(const Series&)>& visit) {
    const std::size_t e = window.exponents.size();
    const std::size_t limit = window.max_support.value_or(e);
    std::vector<Index> digits(e, 0);
    while (true) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < e; ++i)
            if (digits[i] != zero) terms.push_back(Term{window.exponents[i], digits[i]});
        if (terms.size() <= limit) visit(make(std::move(terms)));
        std::size_t pos = e;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            if (pos == 0) return;
        }
        if (e == 0) return;
    }
}

}  // namespace

std::uint64_t window_cardinality(const SupportWindow& window, std::size_t coefficient_count) {
    const std::size_t e = window.exponents.size();
    const std::size_t limit = std::min(window.max_support.value_or(e), e);
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(e, j)
    std::uint64_t power = 1;  // (q - 1)^j
    for (std::size_t j = 0; j <= limit; ++j) {
        total = saturating_add(total, saturating_mul(binom, power));
        binom = saturating_mul(binom, e - j) / (j + 1);
        power = saturating_mul(power, coefficient_count - 1);
    }
    return total;
}

void for_each_window_series(const RingPtr& ring, const MonoidPtr& monoid, const SupportWindow& window,
                            const std::function<void(const Series&)>& visit) {
    validate_window(window, *monoid);
    enumerate(ring->size(), ring->zero(), window,
              [&](std::vector<Term> t) { return Series::over_ring(ring, monoid, std::move(t)); }, visit);
}

void for_each_window_series(const ModulePtr& module, const MonoidPtr& monoid,
                            const SupportWindow& window,
                            const std::function<void(const Series&)>& visit) {
    validate_window(window, *monoid);
    enumerate(module->size(), module->zero(), window,
              [&](std::vector<Term> t) { return Series::over_module(module, monoid, std::move(t)); },
              visit);
}

std::vector<Series> window_series(const RingPtr& ring, const MonoidPtr& monoid,
                                  const SupportWindow& window) {
    std::vector<Series> out;
    for_each_window_series(ring, monoid, window, [&](const Series& s) { out.push_back(s); });
    return out;
}

std::vector<Series> window_series(const ModulePtr& module, const MonoidPtr& monoid,
                                  const SupportWindow& window) {
    std::vector<Series> out;
    for_each_window_series(module, monoid, window, [&](const Series& s) { out.push_back(s); });
    return out;
}

}  // namespace semimod
