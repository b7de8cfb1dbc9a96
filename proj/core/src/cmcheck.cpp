#include "tricm/cmcheck.hpp"

#include <set>
#include <stdexcept>

namespace tricm {

std::string_view to_string(CmStatus status) {
    switch (status) {
        case CmStatus::cm: return "CM";
        case CmStatus::not_cm: return "NOT_CM";
        case CmStatus::unknown: return "UNKNOWN";
    }
    return "?";
}

std::string_view to_string(CmMethod method) {
    switch (method) {
        case CmMethod::h_screen: return "h-screen";
        case CmMethod::connectivity: return "connectivity";
        case CmMethod::reisner_full: return "reisner-full";
        case CmMethod::reisner_parity: return "reisner-parity";
        case CmMethod::fast_path_theorem: return "fast-path-theorem";
    }
    return "?";
}

std::string triangular_complex_name(int n) { return "Delta(" + std::to_string(n) + ")"; }

HScreen h_screen(const FVector& f) {
    HScreen out{h_vector(f), std::nullopt};
    for (std::size_t k = 0; k < out.h.entries.size(); ++k)
        if (out.h.entries[k] < 0) {
            out.failing_index = k;
            break;
        }
    return out;
}

HScreen h_screen(const SimplicialComplex& c) { return h_screen(f_vector(c)); }

namespace {

std::string link_name(const Face& f) {
    std::string s = "lk{";
    for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + std::to_string(f[k]);
    return s + "}";
}

// Flattened face list of a compressed complex; equal keys mean identical
// complexes up to order-preserving relabeling.
std::vector<Vertex> link_key(const SimplicialComplex& compressed) {
    std::vector<Vertex> key{static_cast<Vertex>(compressed.vertex_count())};
    constexpr Vertex separator = static_cast<Vertex>(-1);
    for (int d = 0; d <= compressed.dimension(); ++d)
        for (const auto& f : compressed.faces(d)) {
            key.insert(key.end(), f.begin(), f.end());
            key.push_back(separator);
        }
    return key;
}

// First i in [-1, dim) with H̃_i != 0.
std::optional<int> first_nonvanishing_below_top(const BettiTable& table, int dim) {
    for (int i = -1; i < dim; ++i)
        if (table.reduced(i) != 0) return i;
    return std::nullopt;
}

bool over_cap(const SimplicialComplex& c, const ReisnerOptions& options) {
    return options.max_faces != 0 && c.total_faces() > options.max_faces;
}

}  // namespace

CmVerdict reisner_check(const SimplicialComplex& c, FieldSpec field, ReisnerOptions options) {
    if (c.is_void()) throw std::invalid_argument("Reisner check on the void complex");
    CmVerdict verdict;
    verdict.field = field;
    verdict.method = c.dimension() == 1 ? CmMethod::connectivity : CmMethod::reisner_full;
    if (over_cap(c, options)) {
        verdict.status = CmStatus::unknown;
        return verdict;
    }

    std::set<std::vector<Vertex>> seen;
    for (int d = c.dimension(); d >= -1; --d) {
        for (const auto& face : c.faces(d)) {
            const SimplicialComplex lk = link(c, face);
            const int lk_dim = lk.dimension();
            // dimension <= 0: H̃_{-1} vanishes as soon as there is a vertex
            if (lk_dim <= 0) continue;
            const SimplicialComplex key_complex = compress(lk);
            if (!seen.insert(link_key(key_complex)).second) continue;
            const BettiTable table = reduced_betti_table(key_complex, field, options.homology);
            verdict.heuristic = verdict.heuristic || table.heuristic;
            if (auto bad = first_nonvanishing_below_top(table, lk_dim)) {
                verdict.status = CmStatus::not_cm;
                verdict.witnesses.push_back(HomologyWitness{link_name(face), *bad, table.reduced(*bad)});
                return verdict;
            }
        }
    }
    verdict.status = CmStatus::cm;
    return verdict;
}

CmVerdict classify_complex(const SimplicialComplex& c, FieldSpec field, bool force_full, ReisnerOptions options) {
    if (c.is_void()) throw std::invalid_argument("classification of the void complex");
    if (!force_full) {
        const HScreen screen = h_screen(c);
        if (!screen.passed()) {
            CmVerdict verdict;
            verdict.status = CmStatus::not_cm;
            verdict.field = field;
            verdict.method = CmMethod::h_screen;
            verdict.witnesses.push_back(
                HScreenWitness{"Delta", *screen.failing_index, screen.h.entries[*screen.failing_index]});
            return verdict;
        }
    }
    return reisner_check(c, field, options);
}

CmVerdict reisner_triangular(int n, FieldSpec field, ReisnerOptions options) {
    if (n < 2) throw std::invalid_argument("reisner_triangular needs n >= 2");
    CmVerdict verdict;
    verdict.field = field;
    // Δ(0) and Δ(1) only occur as links of facets, which impose no condition.
    const int first = n % 2 == 0 ? 2 : 3;

    for (int l = first; l <= n; l += 2) {
        const HScreen screen = h_screen(triangular_f_closed(l));
        if (!screen.passed()) {
            verdict.status = CmStatus::not_cm;
            verdict.method = CmMethod::h_screen;
            verdict.witnesses.push_back(HScreenWitness{triangular_complex_name(l), *screen.failing_index,
                                                       screen.h.entries[*screen.failing_index]});
            return verdict;
        }
    }

    verdict.method = CmMethod::reisner_parity;
    for (int l = first; l <= n; l += 2) {
        const SimplicialComplex delta = triangular_complex(l);
        if (over_cap(delta, options)) {
            verdict.status = CmStatus::unknown;
            return verdict;
        }
        const BettiTable table = reduced_betti_table(delta, field, options.homology);
        verdict.heuristic = verdict.heuristic || table.heuristic;
        if (auto bad = first_nonvanishing_below_top(table, delta.dimension())) {
            verdict.status = CmStatus::not_cm;
            verdict.witnesses.push_back(HomologyWitness{triangular_complex_name(l), *bad, table.reduced(*bad)});
            return verdict;
        }
    }
    verdict.status = CmStatus::cm;
    return verdict;
}

namespace {

std::optional<CmVerdict> settled_triangular(int n, FieldSpec field) {
    CmVerdict verdict;
    verdict.field = field;
    verdict.method = CmMethod::fast_path_theorem;
    if (n == 2 || n == 3 || n == 5) {
        verdict.status = CmStatus::cm;
        return verdict;
    }
    if (n % 2 == 0) {
        // Δ(4) is three disjoint edges
        const SimplicialComplex delta4 = triangular_complex(4);
        const BettiTable table = reduced_betti_table(delta4, field);
        verdict.status = CmStatus::not_cm;
        verdict.witnesses.push_back(HomologyWitness{triangular_complex_name(4), 0, table.reduced(0)});
        return verdict;
    }
    if (n >= 11) {
        const HScreen screen = h_screen(triangular_f_closed(11));
        verdict.status = CmStatus::not_cm;
        verdict.witnesses.push_back(HScreenWitness{triangular_complex_name(11), *screen.failing_index,
                                                   screen.h.entries[*screen.failing_index]});
        return verdict;
    }
    return std::nullopt;
}

}  // namespace

CmVerdict classify_triangular(int n, FieldSpec field, bool force_full, ReisnerOptions options) {
    if (n < 2) throw std::invalid_argument("classify_triangular needs n >= 2");
    auto settled = settled_triangular(n, field);
    if (!force_full && settled) return *settled;
    CmVerdict full = reisner_triangular(n, field, options);
    if (settled && full.status != CmStatus::unknown && full.status != settled->status)
        throw std::logic_error("full Reisner check disagrees with the settled classification of T_" +
                               std::to_string(n));
    return full;
}

KrullDimension krull_dimension(const Graph& g) { return {independence_number(g)}; }

}  // namespace tricm
