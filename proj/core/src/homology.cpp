#include "tricm/homology.hpp"

#include <stdexcept>

namespace tricm {

SparseMatrix boundary_matrix(const SimplicialComplex& c, int i, FieldSpec field) {
    if (c.is_void()) throw std::invalid_argument("boundary matrix of the void complex");
    const auto& cells = c.faces(i);
    SparseMatrix m(c.face_count(i - 1), cells.size());
    if (i < 0 || cells.empty() || m.rows() == 0) return m;
    const std::int64_t minus_one = field.is_rational() ? -1 : static_cast<std::int64_t>(field.characteristic()) - 1;
    Face facet;
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const Face& sigma = cells[j];
        SparseMatrix::Column col;
        col.reserve(sigma.size());
        for (std::size_t k = 0; k < sigma.size(); ++k) {
            facet.assign(sigma.begin(), sigma.end());
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
            const std::size_t row = c.index_of(facet);
            if (row == SimplicialComplex::npos) throw std::logic_error("complex is not closed under subsets");
            col.emplace_back(static_cast<std::uint32_t>(row), k % 2 ? minus_one : 1);
        }
        m.set_column(j, std::move(col));
    }
    return m;
}

BettiTable reduced_betti_table(const SimplicialComplex& c, FieldSpec field, HomologyOptions options) {
    BettiTable table{field, {}, false};
    if (c.is_void()) return table;
    const int dim = c.dimension();

    // ranks[i + 1] = rank ∂_i for -1 <= i <= dim + 1
    std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 3), 0);
    if (dim >= 0) ranks[1] = 1;  // augmentation
    if (dim == 1) {
        ranks[2] = c.face_count(0) - component_count(c);
    } else {
        for (int i = 1; i <= dim; ++i) {
            const SparseMatrix d = boundary_matrix(c, i, field);
            ranks[static_cast<std::size_t>(i + 1)] = rank(d, field, options.rational_mode);
        }
        table.heuristic = field.is_rational() && options.rational_mode == RationalRankMode::multimodular && dim >= 2;
    }
    for (int i = -1; i <= dim; ++i) {
        const auto k = static_cast<std::size_t>(i + 1);
        table.dims.push_back(c.face_count(i) - ranks[k] - ranks[k + 1]);
    }
    return table;
}

}  // namespace tricm
