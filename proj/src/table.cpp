#include "semimod/table.hpp"

#include <sstream>

#include "semimod/errors.hpp"

namespace semimod {

Table Table::from_rows(const std::vector<std::vector<Index>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Table t(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw ValidationError("table row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(c));
        }
        for (std::size_t j = 0; j < c; ++j) t(i, j) = rows[i][j];
    }
    return t;
}

std::vector<std::vector<Index>> Table::to_rows() const {
    std::vector<std::vector<Index>> out(rows_, std::vector<Index>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

std::string AxiomFailure::describe() const {
    std::ostringstream os;
    os << axiom << " fails at (";
    for (std::size_t i = 0; i < elements.size(); ++i) os << (i ? ", " : "") << elements[i];
    os << ")";
    return os.str();
}

ElementSet additive_closure(const Table& add, Index zero, const ElementSet& generators) {
    const std::vector<Index> gens = generators.members();
    ElementSet closed(add.rows());
    closed.insert(zero);
    std::vector<Index> frontier{zero};
    while (!frontier.empty()) {
        const Index x = frontier.back();
        frontier.pop_back();
        for (Index g : gens) {
            const Index y = add(x, g);
            if (closed.insert(y)) frontier.push_back(y);
        }
    }
    return closed;
}

std::optional<AxiomFailure> audit_abelian_group(const Table& add, Index zero) {
    const std::size_t n = add.rows();
    if (n == 0 || add.cols() != n) return AxiomFailure{"square nonempty addition table", {}};
    if (zero >= n) return AxiomFailure{"zero in range", {zero}};
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            if (add(a, b) >= n) return AxiomFailure{"addition entry in range", {a, b}};
    for (Index a = 0; a < n; ++a) {
        if (add(zero, a) != a) return AxiomFailure{"additive identity", {a}};
        bool has_inverse = false;
        for (Index b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) return AxiomFailure{"additive commutativity", {a, b}};
            if (add(a, b) == zero) has_inverse = true;
        }
        if (!has_inverse) return AxiomFailure{"additive inverse", {a}};
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
            for (Index c = 0; c < n; ++c)
                if (add(add(a, b), c) != add(a, add(b, c)))
                    return AxiomFailure{"additive associativity", {a, b, c}};
    return std::nullopt;
}

}  // namespace semimod
