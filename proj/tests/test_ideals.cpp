#include "tricm/ideals.hpp"
#include "tricm/polynomial.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace tricm;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

std::vector<Exponents> all_monomials(std::size_t vars, unsigned degree) {
    std::vector<Exponents> out;
    Exponents e(vars, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == vars) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            e[i] = 0;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = static_cast<std::uint16_t>(k);
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    if (vars == 0) {
        if (degree == 0) out.push_back(e);
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

Exponents times(Exponents a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<std::uint16_t>(a[i] + b[i]);
    return a;
}

// dim (K[x]/(I + θ))_δ computed in the full polynomial ring: the degree-δ piece
// of the ideal is spanned by all monomials times edge generators and all
// monomials times the forms; no standard-monomial basis involved.
long long oracle_quotient_dim(const Graph& g, const HsopSequence& seq, unsigned delta, long long p) {
    const std::size_t n = g.vertex_count();
    const auto basis = all_monomials(n, delta);
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<long long>> rows;
    if (delta >= 2)
        for (const auto& m : all_monomials(n, delta - 2))
            for (const auto& [u, v] : g.edges()) {
                Exponents e = m;
                ++e[u];
                ++e[v];
                std::vector<long long> row(basis.size(), 0);
                row[index.at(e)] = 1;
                rows.push_back(std::move(row));
            }
    for (const auto& form : seq.forms) {
        if (form.degree > delta) continue;
        for (const auto& m : all_monomials(n, delta - form.degree)) {
            std::vector<long long> row(basis.size(), 0);
            for (const auto& t : form.terms) row[index.at(times(m, t))] += 1;
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return static_cast<long long>(basis.size());
    return static_cast<long long>(basis.size() - oracle::rank_mod(rows, p));
}

std::vector<long long> actual_dims(const RegularityVerdict& v) {
    std::vector<long long> out;
    for (const auto& d : v.per_degree) out.push_back(d.actual.get_si());
    return out;
}

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

bool has_dependent_support(const Graph& g, const Exponents& e) {
    VertexList support;
    for (Vertex v = 0; v < e.size(); ++v)
        if (e[v]) support.push_back(v);
    return !is_independent(g, support);
}

}  // namespace

TEST(EdgeIdeal, Examples) {
    const auto g4 = triangular(4);
    const auto i4 = edge_ideal(g4);
    EXPECT_EQ(i4.variable_count, 6U);
    EXPECT_EQ(i4.generators.size(), 12U);
    const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> listed{
        {{1, 2}, {1, 3}}, {{1, 2}, {1, 4}}, {{1, 2}, {2, 3}}, {{1, 2}, {2, 4}},
        {{1, 3}, {3, 4}}, {{1, 4}, {3, 4}}, {{2, 3}, {3, 4}}, {{2, 4}, {3, 4}}};
    for (const auto& [a, b] : listed) {
        const Vertex u = pair_index(4, a.first, a.second);
        const Vertex v = pair_index(4, b.first, b.second);
        const Edge e{std::min(u, v), std::max(u, v)};
        EXPECT_NE(std::find(i4.generators.begin(), i4.generators.end(), e), i4.generators.end());
    }
    EXPECT_EQ(edge_ideal(complete(2)).generators.size(), 1U);
    EXPECT_EQ(edge_ideal(triangular(7)).generators.size(), 105U);
    EXPECT_TRUE(std::is_sorted(i4.generators.begin(), i4.generators.end()));
}

TEST(Hsop, TriangularFourElementary) {
    const auto g = triangular(4);
    const auto seq = hsop(g, HsopKind::independent_set_sums);
    ASSERT_EQ(seq.forms.size(), 2U);
    EXPECT_EQ(seq.forms[0].terms.size(), 6U);
    std::vector<std::string> labels;
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
    EXPECT_EQ(render_form(seq.forms[1], labels), "x(1,2)*x(3,4) + x(1,3)*x(2,4) + x(1,4)*x(2,3)");
    EXPECT_EQ(to_string(seq.kind), "elementary");
}

TEST(Hsop, ShapesAndTermCounts) {
    const auto p7 = hsop(triangular(7), HsopKind::power_sums);
    EXPECT_EQ(p7.variable_count, 21U);
    EXPECT_EQ(p7.degrees(), (std::vector<unsigned>{1, 2, 3}));
    for (const auto& f : p7.forms) EXPECT_EQ(f.terms.size(), 21U);
    const auto k = hsop(complete(5), HsopKind::independent_set_sums);
    ASSERT_EQ(k.forms.size(), 1U);
    EXPECT_EQ(k.forms[0].terms.size(), 5U);
    for (int n = 4; n <= 8; ++n) {
        const auto g = triangular(n);
        const auto f = f_vector(independence_complex(g));
        const auto seq = hsop(g, HsopKind::independent_set_sums);
        for (std::size_t k2 = 1; k2 <= seq.forms.size(); ++k2)
            EXPECT_EQ(BigInt(static_cast<unsigned long>(seq.forms[k2 - 1].terms.size())), f.entries[k2]);
    }
    EXPECT_THROW(hsop(Graph(0, {}), HsopKind::power_sums), std::invalid_argument);
    EXPECT_EQ(render_monomial(Exponents{0, 0, 0, 2}, {}), "x3^2");
    EXPECT_EQ(render_monomial(Exponents{0, 0}, {}), "1");
}

TEST(Hsop, ElementarySymmetricAgreesModuloEdgeIdeal) {
    for (const auto& g : {triangular(4), triangular(5), path(5), complete(4)}) {
        const std::size_t n = g.vertex_count();
        const auto seq = hsop(g, HsopKind::independent_set_sums);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto sigma = Polynomial::elementary_symmetric(n, k);
            std::vector<Exponents> surviving;
            for (const auto& [e, c] : sigma.terms()) {
                EXPECT_EQ(c, 1);
                if (has_dependent_support(g, e)) {
                    bool divisible = false;
                    for (const auto& [u, v] : edge_ideal(g).generators) divisible |= e[u] && e[v];
                    EXPECT_TRUE(divisible);
                } else {
                    surviving.push_back(e);
                }
            }
            if (k <= seq.forms.size()) {
                auto terms = seq.forms[k - 1].terms;
                std::sort(terms.begin(), terms.end());
                std::sort(surviving.begin(), surviving.end());
                EXPECT_EQ(terms, surviving);
            } else {
                EXPECT_TRUE(surviving.empty());
            }
        }
    }
}

TEST(HilbertFunction, Examples) {
    const auto g = triangular(4);
    EXPECT_EQ(hilbert_function(g, 0), 1);
    EXPECT_EQ(hilbert_function(g, 1), 6);
    EXPECT_EQ(hilbert_function(g, 2), 9);
    EXPECT_EQ(hilbert_function(path(3), 0), 1);
}

TEST(HilbertFunction, CountsIndependentSupportMonomials) {
    for (const auto& g : {triangular(4), triangular(5), path(6), complete(4), edgeless(3)})
        for (unsigned d = 0; d <= 5; ++d) {
            long long count = 0;
            for (const auto& m : all_monomials(g.vertex_count(), d)) count += !has_dependent_support(g, m);
            EXPECT_EQ(hilbert_function(g, d), BigInt(static_cast<long>(count)));
            EXPECT_EQ(standard_monomials(g, d).size(), static_cast<std::size_t>(count));
        }
    const auto basis = standard_monomials(triangular(5), 3);
    EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
}

TEST(ExpectedArtinian, Examples) {
    const std::vector<unsigned> d12{1, 2};
    const std::vector<unsigned> d1{1};
    EXPECT_EQ(expected_artinian_hilbert(HVector{{1, 8, 6}}, d12), (std::vector<BigInt>{1, 9, 14, 6}));
    EXPECT_EQ(expected_artinian_hilbert(HVector{{1}}, d1), (std::vector<BigInt>{1}));
    EXPECT_EQ(expected_artinian_hilbert(HVector{{1, 4, -2}}, d12), (std::vector<BigInt>{1, 5, 2, -2}));
    EXPECT_EQ(expected_polynomial_degree(HVector{{1, 8, 6}}, d12), 3U);
}

TEST(VerifyRegular, TriangularFiveElementary) {
    const auto g = triangular(5);
    const auto v = verify_regular(g, hsop(g, HsopKind::independent_set_sums), Q);
    EXPECT_EQ(v.status, RegularityStatus::regular);
    EXPECT_EQ(actual_dims(v), (std::vector<long long>{1, 9, 14, 6, 0}));
    EXPECT_TRUE(v.certified_by_prime.has_value());
    const auto exact = verify_regular(g, hsop(g, HsopKind::independent_set_sums), Q, {.exact_rational = true});
    EXPECT_EQ(exact.status, RegularityStatus::regular);
    EXPECT_EQ(actual_dims(exact), actual_dims(v));
    EXPECT_FALSE(exact.certified_by_prime.has_value());
}

TEST(VerifyRegular, TriangularFourElementaryFails) {
    const auto g = triangular(4);
    const auto v = verify_regular(g, hsop(g, HsopKind::independent_set_sums), Q);
    EXPECT_EQ(v.status, RegularityStatus::not_regular);
    ASSERT_TRUE(v.failing_degree.has_value());
    EXPECT_EQ(*v.failing_degree, 3U);
    EXPECT_EQ(to_string(v.status), "NOT_REGULAR");
}

TEST(VerifyRegular, TriangularSevenPowerSums) {
    const auto g = triangular(7);
    const auto v = verify_regular(g, hsop(g, HsopKind::power_sums), Q);
    EXPECT_EQ(v.status, RegularityStatus::regular);
    for (const auto& d : v.per_degree) EXPECT_EQ(d.actual, d.expected);
}

TEST(VerifyRegular, TriangularSevenHasNoRegularSequenceInCharacteristicThree) {
    const auto g = triangular(7);
    EXPECT_NE(verify_regular(g, hsop(g, HsopKind::independent_set_sums), F3).status, RegularityStatus::regular);
    EXPECT_EQ(verify_regular(g, hsop(g, HsopKind::independent_set_sums), F2).status, RegularityStatus::regular);
}

TEST(VerifyRegular, PowerSumsNeverRegularOverTwoElements) {
    for (const auto& g : {triangular(4), triangular(5), path(4), edgeless(2), triangular(6)}) {
        const auto v = verify_regular(g, hsop(g, HsopKind::power_sums), F2);
        EXPECT_TRUE(v.status == RegularityStatus::not_regular || v.status == RegularityStatus::not_hsop_within_cap)
            << to_string(v.status);
    }
    const auto g = triangular(5);
    EXPECT_EQ(verify_regular(g, hsop(g, HsopKind::power_sums), F2).status, RegularityStatus::not_hsop_within_cap);
}

TEST(VerifyRegular, CompleteGraphsOverEveryField) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto field : {Q, F2, F3, FieldSpec::prime(7)}) {
            const auto g = complete(n);
            const auto v = verify_regular(g, hsop(g, HsopKind::independent_set_sums), field);
            EXPECT_EQ(v.status, RegularityStatus::regular) << n << " " << field.name();
        }
}

TEST(VerifyRegular, MatchesFullRingOracle) {
    struct Case {
        Graph g;
        HsopKind kind;
        unsigned max_degree;
    };
    const std::vector<Case> cases{{triangular(4), HsopKind::independent_set_sums, 4},
                                  {triangular(4), HsopKind::power_sums, 4},
                                  {triangular(5), HsopKind::independent_set_sums, 4},
                                  {triangular(5), HsopKind::power_sums, 4},
                                  {path(5), HsopKind::independent_set_sums, 5},
                                  {path(4), HsopKind::power_sums, 5}};
    for (const auto& c : cases) {
        const auto seq = hsop(c.g, c.kind);
        for (long long p : {2LL, 3LL, 1000003LL}) {
            RegularityOptions opts;
            opts.degree_cap = std::max(c.max_degree, expected_polynomial_degree(
                                                         h_vector(f_vector(independence_complex(c.g))), seq.degrees()) + 1);
            const auto v = verify_regular(c.g, seq, FieldSpec::prime(static_cast<std::uint32_t>(p)), opts);
            for (const auto& d : v.per_degree) {
                if (d.degree > c.max_degree) break;
                EXPECT_EQ(d.actual, BigInt(static_cast<long>(oracle_quotient_dim(c.g, seq, d.degree, p)))) << "p=" << p << " deg=" << d.degree;
            }
        }
    }
}

TEST(VerifyRegular, ActualNeverBelowNonnegativeExpected) {
    for (int n = 3; n <= 7; ++n)
        for (auto kind : {HsopKind::independent_set_sums, HsopKind::power_sums}) {
            const auto g = triangular(n);
            const auto v = verify_regular(g, hsop(g, kind), FieldSpec::prime(1000003));
            for (const auto& d : v.per_degree)
                if (d.expected >= 0) EXPECT_GE(d.actual, d.expected);
        }
}

TEST(VerifyRegular, RejectsBadInputs) {
    const auto g = triangular(5);
    const auto seq = hsop(triangular(4), HsopKind::power_sums);
    EXPECT_THROW(verify_regular(g, seq, Q), std::invalid_argument);
    EXPECT_THROW(verify_regular(g, hsop(g, HsopKind::power_sums), Q, {.degree_cap = 3}), std::invalid_argument);
}

TEST(VerifyRegular, ColumnCapIsReported) {
    const auto g = triangular(7);
    const auto v = verify_regular(g, hsop(g, HsopKind::power_sums), F3, {.max_columns = 50});
    EXPECT_EQ(v.status, RegularityStatus::cap_reached);
}

TEST(Telescoping, SmallOrders) {
    for (int m = 1; m <= 8; ++m) EXPECT_TRUE(telescoping_check(m)) << m;
    EXPECT_THROW(telescoping_check(0), std::invalid_argument);
    EXPECT_THROW(telescoping_check(9), std::invalid_argument);
}

TEST(Telescoping, IdentityForTwoVariablesByHand) {
    const auto z0 = Polynomial::variable(2, 0);
    const auto lhs = z0 * z0;
    const auto rhs = z0 * Polynomial::elementary_symmetric(2, 1) - Polynomial::elementary_symmetric(2, 2);
    EXPECT_EQ(lhs, rhs);
}
