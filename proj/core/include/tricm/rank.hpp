#pragma once

#include "tricm/field.hpp"
#include "tricm/sparse_matrix.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace tricm {

enum class RationalRankMode {
    /// Fraction-free integer elimination with arbitrary-precision entries.
    exact,
    /// Maximum of ranks modulo several large primes: a certified lower bound
    /// on the rational rank, reported as heuristic.
    multimodular,
};

/// Primes above 10^6 used for modular certificates.
inline constexpr std::array<std::uint32_t, 3> kLargePrimes{1000003U, 1000033U, 1000037U};

/// Above this fraction of nonzero entries the elimination switches to a dense
/// representation.
inline constexpr double kDenseThreshold = 0.2;

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);
/// Exact rank over Q.
std::size_t rank_rational(const SparseMatrix& m);
/// Dense Bareiss elimination over arbitrary-precision integers.
std::size_t rank_bareiss_dense(const SparseMatrix& m);
std::size_t rank_multimodular(const SparseMatrix& m, std::span<const std::uint32_t> primes = kLargePrimes);

std::size_t rank(const SparseMatrix& m, FieldSpec field, RationalRankMode mode = RationalRankMode::exact);

}  // namespace tricm
