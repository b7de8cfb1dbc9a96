#include "tricm/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricm {

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
    SparseMatrix m(rows, cols);
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t k = 0; k < triplets.size(); ++k) {
        const auto& t = triplets[k];
        if (t.row >= rows || t.col >= cols) throw std::invalid_argument("triplet out of range");
        if (k > 0 && triplets[k - 1].row == t.row && triplets[k - 1].col == t.col)
            throw std::invalid_argument("duplicate matrix position");
        if (t.value != 0) m.columns_[t.col].emplace_back(t.row, t.value);
    }
    return m;
}

void SparseMatrix::set_column(std::size_t j, Column column) {
    std::sort(column.begin(), column.end());
    std::erase_if(column, [](const Entry& e) { return e.second == 0; });
    columns_.at(j) = std::move(column);
}

std::size_t SparseMatrix::push_column(Column column) {
    columns_.emplace_back();
    set_column(columns_.size() - 1, std::move(column));
    return columns_.size() - 1;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
    std::size_t total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
}

double SparseMatrix::density() const noexcept {
    const double cells = static_cast<double>(rows_) * static_cast<double>(columns_.size());
    return cells == 0 ? 0.0 : static_cast<double>(nonzeros()) / cells;
}

std::vector<Triplet> SparseMatrix::triplets() const {
    std::vector<Triplet> out;
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (auto [r, v] : columns_[j]) out.push_back({r, static_cast<std::uint32_t>(j), v});
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(columns_.size(), rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (auto [r, v] : columns_[j]) t.columns_[r].emplace_back(static_cast<std::uint32_t>(j), v);
    return t;
}

SparseMatrix SparseMatrix::reduced_mod(std::uint32_t p) const {
    SparseMatrix out(rows_, columns_.size());
    const auto mod = static_cast<std::int64_t>(p);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (auto [r, v] : columns_[j]) {
            const std::int64_t w = ((v % mod) + mod) % mod;
            if (w) out.columns_[j].emplace_back(r, w);
        }
    return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    SparseMatrix out(a.rows(), b.cols());
    std::vector<std::int64_t> acc(a.rows(), 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (auto [k, bv] : b.column(j))
            for (auto [i, av] : a.column(k)) {
                if (acc[i] == 0) touched.push_back(i);
                acc[i] += av * bv;
            }
        SparseMatrix::Column col;
        for (auto i : touched) {
            if (acc[i] != 0) col.emplace_back(i, acc[i]);
            acc[i] = 0;
        }
        touched.clear();
        out.set_column(j, std::move(col));
    }
    return out;
}

}  // namespace tricm
