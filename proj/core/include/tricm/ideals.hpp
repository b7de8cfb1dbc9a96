#pragma once

#include "tricm/bigint.hpp"
#include "tricm/complex.hpp"
#include "tricm/field.hpp"
#include "tricm/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tricm {

/// Dense exponent vector of a monomial in x_0..x_{N-1}.
using Exponents = std::vector<std::uint16_t>;

struct EdgeIdeal {
    std::size_t variable_count = 0;
    /// x_u x_v for each edge, u < v, sorted.
    std::vector<Edge> generators;
};

EdgeIdeal edge_ideal(const Graph& g);

enum class HsopKind {
    /// F_k = sum over independent k-sets S of prod_{v in S} x_v
    independent_set_sums,
    /// p_k = sum_i x_i^k
    power_sums,
};

std::string_view to_string(HsopKind kind);

/// Homogeneous form with all coefficients equal to 1.
struct Form {
    unsigned degree = 0;
    std::vector<Exponents> terms;
};

struct HsopSequence {
    HsopKind kind = HsopKind::independent_set_sums;
    std::size_t variable_count = 0;
    std::vector<Form> forms;

    std::vector<unsigned> degrees() const;
};

/// The d forms of degrees 1..d, d the Krull dimension of R/I(G). Throws
/// std::invalid_argument when d = 0.
HsopSequence hsop(const Graph& g, HsopKind kind);

/// Readable rendering, e.g. "x(1,2)*x(3,4)" or "x3^2"; labels may be empty.
std::string render_monomial(const Exponents& m, const std::vector<std::string>& labels);
std::string render_form(const Form& form, const std::vector<std::string>& labels);

/// dim_K (R/I(G))_degree = sum_k f_{k-1} C(degree-1, k-1), 1 in degree 0.
BigInt hilbert_function(const FVector& f, unsigned degree);
BigInt hilbert_function(const Graph& g, unsigned degree);

/// Coefficients of h(t) * prod_k (1 + t + ... + t^{e_k - 1}).
std::vector<BigInt> expected_artinian_hilbert(const HVector& h, std::span<const unsigned> degrees);

/// Monomials of the given degree whose support is independent in g, sorted
/// lexicographically by exponent vector (a basis of (R/I(G))_degree).
std::vector<Exponents> standard_monomials(const Graph& g, unsigned degree);

enum class RegularityStatus { regular, not_regular, not_hsop_within_cap, cap_reached };

std::string_view to_string(RegularityStatus status);

struct DegreeDimension {
    unsigned degree;
    BigInt expected;
    BigInt actual;
    friend bool operator==(const DegreeDimension&, const DegreeDimension&) = default;
};

struct RegularityVerdict {
    RegularityStatus status = RegularityStatus::cap_reached;
    std::vector<DegreeDimension> per_degree;
    std::optional<unsigned> failing_degree;
    FieldSpec field;
    /// For rational verdicts settled by a modular computation.
    std::optional<std::uint32_t> certified_by_prime;

    friend bool operator==(const RegularityVerdict&, const RegularityVerdict&) = default;
};

struct RegularityOptions {
    /// Highest degree examined; defaults to the expected polynomial degree + 2.
    std::optional<unsigned> degree_cap;
    /// Over Q, skip the modular certificate and eliminate over the integers.
    bool exact_rational = false;
    /// Resource cap on matrix columns in any single degree; 0 disables it.
    std::size_t max_columns = 0;
};

/// Degree of expected_artinian_hilbert for an h-vector and form degrees.
unsigned expected_polynomial_degree(const HVector& h, std::span<const unsigned> degrees);

/// Compares dim (R/(I(G) + seq))_δ with the expected Artinian Hilbert function
/// for δ = 0, 1, ... . REGULAR when the two agree through the first degree at
/// which both vanish. On the first mismatch the scan continues only to see
/// whether the quotient still vanishes by the cap (NOT_REGULAR) or not
/// (NOT_HSOP_WITHIN_CAP).
///
/// Over Q the computation first runs modulo two primes above 10^6; a modular
/// REGULAR certifies rational regularity. Otherwise, or with exact_rational,
/// ranks are taken over the integers.
///
/// Throws std::invalid_argument on a variable-count mismatch or a degree cap
/// below the expected polynomial degree + 1.
RegularityVerdict verify_regular(const Graph& g, const HsopSequence& seq, FieldSpec field,
                                 RegularityOptions options = {});

/// Expands z_i^m - sum_k (-1)^{k+1} z_i^{m-k} σ_k in m variables for every i
/// and reports whether all vanish. Requires 1 <= m <= 8.
bool telescoping_check(int m);

}  // namespace tricm
