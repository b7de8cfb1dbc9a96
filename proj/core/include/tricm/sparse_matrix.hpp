#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace tricm {

struct Triplet {
    std::uint32_t row;
    std::uint32_t col;
    std::int64_t value;
    friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Column-major sparse integer matrix. Each column is sorted by row and holds
/// no explicit zeros. Values are interpreted in whatever field the rank is
/// taken over.
class SparseMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Throws std::invalid_argument on duplicate or out-of-range positions.
    static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_[j]; }
    /// Sorts `column` by row and drops zeros.
    void set_column(std::size_t j, Column column);
    std::size_t push_column(Column column);

    std::size_t nonzeros() const noexcept;
    double density() const noexcept;
    bool is_zero() const noexcept { return nonzeros() == 0; }
    std::vector<Triplet> triplets() const;

    SparseMatrix transpose() const;
    /// Entries reduced into [0, p).
    SparseMatrix reduced_mod(std::uint32_t p) const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Exact integer product a * b. Throws std::invalid_argument on shape mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace tricm
