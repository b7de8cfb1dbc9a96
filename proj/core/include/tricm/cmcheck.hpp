#pragma once

#include "tricm/bigint.hpp"
#include "tricm/complex.hpp"
#include "tricm/field.hpp"
#include "tricm/graph.hpp"
#include "tricm/homology.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tricm {

enum class CmStatus { cm, not_cm, unknown };

enum class CmMethod { h_screen, connectivity, reisner_full, reisner_parity, fast_path_theorem };

std::string_view to_string(CmStatus status);
std::string_view to_string(CmMethod method);

/// dim H̃_degree(complex) != 0 below the dimension of `complex`.
struct HomologyWitness {
    std::string complex;
    int degree;
    std::size_t dimension;
    friend bool operator==(const HomologyWitness&, const HomologyWitness&) = default;
};

/// h_index < 0 in the h-vector of `complex`.
struct HScreenWitness {
    std::string complex;
    std::size_t index;
    BigInt value;
    friend bool operator==(const HScreenWitness&, const HScreenWitness&) = default;
};

using CmWitness = std::variant<HomologyWitness, HScreenWitness>;

struct CmVerdict {
    CmStatus status = CmStatus::unknown;
    FieldSpec field;
    std::vector<CmWitness> witnesses;
    CmMethod method = CmMethod::reisner_full;
    /// True when a rational rank came from the multi-modular heuristic.
    bool heuristic = false;

    friend bool operator==(const CmVerdict&, const CmVerdict&) = default;
};

struct KrullDimension {
    std::size_t value;
    friend bool operator==(KrullDimension, KrullDimension) = default;
};

/// Result of the h-vector screen; a failure refutes CM over every field.
struct HScreen {
    HVector h;
    std::optional<std::size_t> failing_index;
    bool passed() const noexcept { return !failing_index; }
};

HScreen h_screen(const SimplicialComplex& c);
HScreen h_screen(const FVector& f);

struct ReisnerOptions {
    HomologyOptions homology;
    /// Resource cap on the total face count of the input complex; 0 disables
    /// it. Exceeding it yields an UNKNOWN verdict.
    std::size_t max_faces = 0;
};

/// Reisner's criterion over every face F (including ∅): H̃_i(lk F) = 0 for
/// i < dim lk F. Links are visited from the largest faces down (cheapest
/// links first) and deduplicated up to order-preserving relabeling. Stops at
/// the first failure.
CmVerdict reisner_check(const SimplicialComplex& c, FieldSpec field, ReisnerOptions options = {});

/// h-screen first, then reisner_check. With force_full the screen is skipped.
CmVerdict classify_complex(const SimplicialComplex& c, FieldSpec field, bool force_full = false,
                           ReisnerOptions options = {});

/// Decides CM-ness of Δ(n) by testing only Δ(l), l <= n of the same parity:
/// all are h-screened (via the closed-form f-vector), then H̃_i(Δ(l)) = 0 for
/// i < dim Δ(l) is checked in increasing l.
CmVerdict reisner_triangular(int n, FieldSpec field, ReisnerOptions options = {});

/// Full classification of T_n. Without force_full, settled cases answer
/// directly (n in {2,3,5}: CM; n even >= 4 and n odd >= 11: not CM, each with
/// a computed witness) and n in {7,9} go through reisner_triangular. With
/// force_full, reisner_triangular always runs and must agree with the direct
/// answer; disagreement throws std::logic_error.
CmVerdict classify_triangular(int n, FieldSpec field, bool force_full = false, ReisnerOptions options = {});

/// Krull dimension of the edge subring, i.e. the independence number.
KrullDimension krull_dimension(const Graph& g);

/// Identifier used in witnesses for Δ(n).
std::string triangular_complex_name(int n);

}  // namespace tricm
