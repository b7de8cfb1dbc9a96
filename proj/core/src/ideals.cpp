#include "tricm/ideals.hpp"

#include "tricm/polynomial.hpp"
#include "tricm/rank.hpp"
#include "tricm/sparse_matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace tricm {

EdgeIdeal edge_ideal(const Graph& g) { return {g.vertex_count(), g.edges()}; }

std::string_view to_string(HsopKind kind) {
    return kind == HsopKind::independent_set_sums ? "elementary" : "powersum";
}

std::string_view to_string(RegularityStatus status) {
    switch (status) {
        case RegularityStatus::regular: return "REGULAR";
        case RegularityStatus::not_regular: return "NOT_REGULAR";
        case RegularityStatus::not_hsop_within_cap: return "NOT_HSOP_WITHIN_CAP";
        case RegularityStatus::cap_reached: return "CAP_REACHED";
    }
    return "?";
}

std::vector<unsigned> HsopSequence::degrees() const {
    std::vector<unsigned> out;
    for (const auto& f : forms) out.push_back(f.degree);
    return out;
}

HsopSequence hsop(const Graph& g, HsopKind kind) {
    const std::size_t d = independence_number(g);
    if (d == 0) throw std::invalid_argument("h.s.o.p. needs Krull dimension >= 1");
    const std::size_t n = g.vertex_count();
    HsopSequence seq{kind, n, {}};
    for (unsigned k = 1; k <= d; ++k) seq.forms.push_back(Form{k, {}});
    if (kind == HsopKind::independent_set_sums) {
        for (const auto& s : independent_sets(g, d)) {
            if (s.empty()) continue;
            Exponents e(n, 0);
            for (auto v : s) e[v] = 1;
            seq.forms[s.size() - 1].terms.push_back(std::move(e));
        }
    } else {
        for (unsigned k = 1; k <= d; ++k)
            for (std::size_t v = 0; v < n; ++v) {
                Exponents e(n, 0);
                e[v] = static_cast<std::uint16_t>(k);
                seq.forms[k - 1].terms.push_back(std::move(e));
            }
    }
    return seq;
}

std::string render_monomial(const Exponents& m, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t v = 0; v < m.size(); ++v) {
        if (!m[v]) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += labels.empty() ? std::to_string(v) : labels[v];
        if (m[v] > 1) out += '^' + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

std::string render_form(const Form& form, const std::vector<std::string>& labels) {
    std::string out;
    for (const auto& t : form.terms) {
        if (!out.empty()) out += " + ";
        out += render_monomial(t, labels);
    }
    return out.empty() ? "0" : out;
}

BigInt hilbert_function(const FVector& f, unsigned degree) {
    if (degree == 0) return 1;
    BigInt total = 0;
    for (int k = 1; k <= f.dimension() + 1 && static_cast<unsigned>(k) <= degree; ++k)
        total += f.at(k - 1) * binomial(degree - 1, static_cast<std::uint64_t>(k - 1));
    return total;
}

BigInt hilbert_function(const Graph& g, unsigned degree) {
    return hilbert_function(f_vector(independence_complex(g)), degree);
}

std::vector<BigInt> expected_artinian_hilbert(const HVector& h, std::span<const unsigned> degrees) {
    std::vector<BigInt> poly = h.entries;
    for (auto e : degrees) {
        if (e == 0) throw std::invalid_argument("form of degree 0");
        std::vector<BigInt> next(poly.size() + e - 1, 0);
        for (std::size_t a = 0; a < poly.size(); ++a)
            for (unsigned b = 0; b < e; ++b) next[a + b] += poly[a];
        poly = std::move(next);
    }
    return poly;
}

unsigned expected_polynomial_degree(const HVector& h, std::span<const unsigned> degrees) {
    if (h.entries.empty()) throw std::invalid_argument("empty h-vector");
    unsigned deg = static_cast<unsigned>(h.entries.size() - 1);
    for (auto e : degrees) deg += e - 1;
    return deg;
}

std::vector<Exponents> standard_monomials(const Graph& g, unsigned degree) {
    const std::size_t n = g.vertex_count();
    std::vector<Exponents> out;
    if (degree == 0) {
        out.emplace_back(n, 0);
        return out;
    }
    for (const auto& support : independent_sets(g, degree)) {
        if (support.empty()) continue;
        // distribute degree over the support with every exponent >= 1
        Exponents e(n, 0);
        for (auto v : support) e[v] = 1;
        const unsigned spare = degree - static_cast<unsigned>(support.size());
        std::function<void(std::size_t, unsigned)> place = [&](std::size_t k, unsigned left) {
            if (k + 1 == support.size()) {
                e[support[k]] = static_cast<std::uint16_t>(1 + left);
                out.push_back(e);
                e[support[k]] = 1;
                return;
            }
            for (unsigned take = 0; take <= left; ++take) {
                e[support[k]] = static_cast<std::uint16_t>(1 + take);
                place(k + 1, left - take);
            }
            e[support[k]] = 1;
        };
        place(0, spare);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct ExponentHash {
    std::size_t operator()(const Exponents& e) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : e) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};

class QuotientDimensions {
public:
    QuotientDimensions(const Graph& g, const HsopSequence& seq, FieldSpec field, std::size_t max_columns)
        : graph_(g), seq_(seq), field_(field), max_columns_(max_columns) {}

    /// dim of the degree-δ piece of R/(I + seq), or nullopt past the column cap.
    std::optional<std::size_t> at(unsigned degree) {
        const auto& basis = monomials(degree);
        std::unordered_map<Exponents, std::uint32_t, ExponentHash> row_of;
        row_of.reserve(basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r) row_of.emplace(basis[r], static_cast<std::uint32_t>(r));

        std::size_t columns = 0;
        for (const auto& form : seq_.forms)
            if (form.degree <= degree) columns += monomials(degree - form.degree).size();
        if (max_columns_ != 0 && columns > max_columns_) return std::nullopt;

        SparseMatrix m(basis.size(), 0);
        Exponents product(seq_.variable_count);
        for (const auto& form : seq_.forms) {
            if (form.degree > degree) continue;
            for (const auto& mono : monomials(degree - form.degree)) {
                std::map<std::uint32_t, std::int64_t> entries;
                for (const auto& term : form.terms) {
                    for (std::size_t v = 0; v < product.size(); ++v)
                        product[v] = static_cast<std::uint16_t>(mono[v] + term[v]);
                    // products with dependent support vanish in R/I(G)
                    if (auto it = row_of.find(product); it != row_of.end()) ++entries[it->second];
                }
                m.push_column(SparseMatrix::Column(entries.begin(), entries.end()));
            }
        }
        return basis.size() - rank(m, field_, RationalRankMode::exact);
    }

private:
    const std::vector<Exponents>& monomials(unsigned degree) {
        auto it = bases_.find(degree);
        if (it == bases_.end()) it = bases_.emplace(degree, standard_monomials(graph_, degree)).first;
        return it->second;
    }

    const Graph& graph_;
    const HsopSequence& seq_;
    FieldSpec field_;
    std::size_t max_columns_;
    std::map<unsigned, std::vector<Exponents>> bases_;
};

RegularityVerdict scan_degrees(const Graph& g, const HsopSequence& seq, FieldSpec field,
                               const std::vector<BigInt>& expected, unsigned cap, std::size_t max_columns) {
    RegularityVerdict verdict;
    verdict.field = field;
    QuotientDimensions dims(g, seq, field, max_columns);
    for (unsigned degree = 0; degree <= cap; ++degree) {
        const auto actual_count = dims.at(degree);
        if (!actual_count) {
            verdict.status = RegularityStatus::cap_reached;
            return verdict;
        }
        const BigInt actual(static_cast<unsigned long>(*actual_count));
        const BigInt want = degree < expected.size() ? expected[degree] : BigInt(0);
        verdict.per_degree.push_back({degree, want, actual});
        if (!verdict.failing_degree) {
            if (actual != want) {
                // The first discrepancy of a Hilbert function against the
                // regular-sequence prediction is always an excess.
                if (actual < want)
                    throw std::logic_error("quotient dimension below the regular-sequence prediction in degree " +
                                           std::to_string(degree));
                verdict.failing_degree = degree;
            } else if (actual == 0) {
                verdict.status = RegularityStatus::regular;
                return verdict;
            }
        }
        if (verdict.failing_degree && actual == 0) {
            verdict.status = RegularityStatus::not_regular;
            return verdict;
        }
    }
    verdict.status = RegularityStatus::not_hsop_within_cap;
    return verdict;
}

}  // namespace

RegularityVerdict verify_regular(const Graph& g, const HsopSequence& seq, FieldSpec field, RegularityOptions options) {
    if (seq.variable_count != g.vertex_count())
        throw std::invalid_argument("sequence has " + std::to_string(seq.variable_count) + " variables, graph has " +
                                    std::to_string(g.vertex_count()));
    for (const auto& form : seq.forms)
        for (const auto& t : form.terms)
            if (t.size() != seq.variable_count) throw std::invalid_argument("term has the wrong number of variables");

    const HVector h = h_vector(f_vector(independence_complex(g)));
    const auto degrees = seq.degrees();
    const std::vector<BigInt> expected = expected_artinian_hilbert(h, degrees);
    const unsigned top = expected_polynomial_degree(h, degrees);
    const unsigned cap = options.degree_cap.value_or(top + 2);
    if (cap < top + 1)
        throw std::invalid_argument("degree cap " + std::to_string(cap) + " is below expected degree + 1 = " +
                                    std::to_string(top + 1));

    if (field.is_rational() && !options.exact_rational) {
        for (std::size_t k = 0; k < 2; ++k) {
            const std::uint32_t p = kLargePrimes[k];
            RegularityVerdict modular = scan_degrees(g, seq, FieldSpec::prime(p), expected, cap, options.max_columns);
            if (modular.status == RegularityStatus::regular) {
                modular.field = field;
                modular.certified_by_prime = p;
                return modular;
            }
            if (modular.status == RegularityStatus::cap_reached) {
                modular.field = field;
                return modular;
            }
        }
    }
    return scan_degrees(g, seq, field, expected, cap, options.max_columns);
}

bool telescoping_check(int m) {
    if (m < 1 || m > 8) throw std::invalid_argument("telescoping_check supports 1 <= m <= 8");
    const auto vars = static_cast<std::size_t>(m);
    std::vector<Polynomial> sigma;
    for (std::size_t k = 0; k <= vars; ++k) sigma.push_back(Polynomial::elementary_symmetric(vars, k));
    for (std::size_t i = 0; i < vars; ++i) {
        Polynomial residual = Polynomial::variable(vars, i, static_cast<std::uint16_t>(m));
        for (std::size_t k = 1; k <= vars; ++k) {
            const auto power = static_cast<std::uint16_t>(vars - k);
            Polynomial term = (power ? Polynomial::variable(vars, i, power) : Polynomial::constant(vars, 1)) * sigma[k];
            if (k % 2) residual -= term;  // sign (-1)^{k+1} on the right-hand side
            else residual += term;
        }
        if (!residual.is_zero()) return false;
    }
    return true;
}

}  // namespace tricm
