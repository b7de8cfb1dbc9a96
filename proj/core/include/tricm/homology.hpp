#pragma once

#include "tricm/complex.hpp"
#include "tricm/field.hpp"
#include "tricm/rank.hpp"
#include "tricm/sparse_matrix.hpp"

#include <cstddef>
#include <vector>

namespace tricm {

/// Matrix of the reduced boundary map C_i -> C_{i-1}, rows indexed by the
/// (i-1)-faces and columns by the i-faces in stored order. Removing the k-th
/// vertex of a face carries sign (-1)^k; ∂_0 is the augmentation. Entries are
/// reduced into [0, p) over F_p. Throws std::invalid_argument on the void
/// complex.
SparseMatrix boundary_matrix(const SimplicialComplex& c, int i, FieldSpec field);

/// dim H̃_i(Δ; K) for -1 <= i <= dim Δ.
struct BettiTable {
    FieldSpec field;
    /// dims[i + 1] = dim H̃_i. Empty for the void complex.
    std::vector<std::size_t> dims;
    /// Set when a rational rank came from the multi-modular heuristic.
    bool heuristic = false;

    std::size_t reduced(int i) const {
        const auto k = static_cast<std::size_t>(i + 1);
        return (i >= -1 && k < dims.size()) ? dims[k] : 0;
    }
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct HomologyOptions {
    RationalRankMode rational_mode = RationalRankMode::exact;
};

/// Reduced Betti numbers via boundary ranks. Complexes of dimension <= 1 are
/// handled by counting components instead. The void complex yields an empty
/// (all-zero) table.
BettiTable reduced_betti_table(const SimplicialComplex& c, FieldSpec field, HomologyOptions options = {});

}  // namespace tricm
