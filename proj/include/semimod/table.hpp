#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semimod/element_set.hpp"

namespace semimod {

// Row-major operation table with index entries.
class Table {
public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Table from_rows(const std::vector<std::vector<Index>>& rows);
    std::vector<std::vector<Index>> to_rows() const;

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Index operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Index& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Index> data_;
};

// A failed axiom together with the elements that exhibit the failure.
struct AxiomFailure {
    std::string axiom;
    std::vector<Index> elements;

    std::string describe() const;
};

// Size caps applied by every constructor that accepts external input.
struct Limits {
    std::size_t ring_cap = 4096;
    std::size_t module_cap = 4096;
};

// Closure of `generators` under the group law `add` (identity `zero`).
// Finite, so closure under addition alone already yields a subgroup.
ElementSet additive_closure(const Table& add, Index zero, const ElementSet& generators);

// Audits for a finite abelian group given by its addition table.
std::optional<AxiomFailure> audit_abelian_group(const Table& add, Index zero);

}  // namespace semimod
