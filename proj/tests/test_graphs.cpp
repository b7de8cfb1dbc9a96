#include "tricm/graph.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace tricm;

namespace {

std::vector<std::vector<bool>> adjacency_of(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(rng)) edges.push_back({a, b});
    return Graph(n, std::move(edges));
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndOutOfRange) {
    EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, NormalizesEdgeList) {
    Graph g(4, {{2, 1}, {0, 3}, {1, 2}});
    ASSERT_EQ(g.edge_count(), 2U);
    EXPECT_EQ(g.edges()[0], (Edge{0, 3}));
    EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
}

TEST(PairLabels, LexicographicRankRoundTrips) {
    for (int n = 2; n <= 12; ++n) {
        std::size_t expected = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                EXPECT_EQ(pair_index(n, i, j), expected);
                EXPECT_EQ(pair_label(n, expected), (PairLabel{i, j}));
                ++expected;
            }
    }
    EXPECT_THROW(pair_index(4, 2, 2), std::invalid_argument);
    EXPECT_THROW(pair_label(4, 6), std::invalid_argument);
}

TEST(Triangular, SmallCases) {
    EXPECT_THROW(triangular(1), std::invalid_argument);
    const Graph t2 = triangular(2);
    EXPECT_EQ(t2.vertex_count(), 1U);
    EXPECT_EQ(t2.edge_count(), 0U);
    EXPECT_EQ(t2.label(0), "(1,2)");

    const Graph t3 = triangular(3);
    EXPECT_EQ(t3.vertex_count(), 3U);
    EXPECT_EQ(t3.edge_count(), 3U);  // complete graph on 3 vertices

    const Graph t4 = triangular(4);
    EXPECT_EQ(t4.vertex_count(), 6U);
    EXPECT_EQ(t4.edge_count(), 12U);
}

TEST(Triangular, MatchesBruteForcePairGraph) {
    for (int n = 2; n <= 10; ++n) {
        const auto ref = oracle::triangular(n);
        EXPECT_EQ(adjacency_of(triangular(n)), ref.adj) << "n=" << n;
        EXPECT_EQ(triangular(n).edge_count(), static_cast<std::size_t>(n * (n - 1) * (n - 2) / 2));
    }
}

TEST(Triangular, RecursiveConstructionAgrees) {
    EXPECT_THROW(triangular_recursive(1), std::invalid_argument);
    for (int n = 2; n <= 9; ++n) EXPECT_EQ(triangular_recursive(n), triangular(n)) << "n=" << n;
    EXPECT_EQ(triangular_recursive(4).edge_count(), 12U);
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(complete(5)).edge_count(), 0U);

    // complement of T_4 is a perfect matching on the three disjoint pairs
    const Graph c4 = complement(triangular(4));
    ASSERT_EQ(c4.edge_count(), 3U);
    for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c4.degree(v), 1U);
    EXPECT_TRUE(c4.adjacent(static_cast<Vertex>(pair_index(4, 1, 2)), static_cast<Vertex>(pair_index(4, 3, 4))));

    // complement of T_5 (Petersen): 10 vertices, 15 edges, 3-regular
    const Graph c5 = complement(triangular(5));
    EXPECT_EQ(c5.vertex_count(), 10U);
    EXPECT_EQ(c5.edge_count(), 15U);
    for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(c5.degree(v), 3U);
}

TEST(Complement, IsAnInvolution) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(1 + trial % 12, 0.4, rng);
        EXPECT_EQ(complement(complement(g)), g);
    }
    EXPECT_EQ(complement(complement(triangular(6))), triangular(6));
}

TEST(Complete, Examples) {
    EXPECT_THROW(complete(0), std::invalid_argument);
    EXPECT_EQ(complete(1).edge_count(), 0U);
    EXPECT_EQ(complete(5).edge_count(), 10U);
    EXPECT_EQ(complete(3).edges(), triangular(3).edges());
}

TEST(IndependentSets, Examples) {
    EXPECT_EQ(independent_sets(edgeless(3)).size(), 8U);

    const auto k4 = independent_sets(complete(4));
    ASSERT_EQ(k4.size(), 5U);
    EXPECT_TRUE(k4[0].empty());

    EXPECT_EQ(independent_set_counts(triangular(5)), (std::vector<std::size_t>{1, 10, 15}));
}

TEST(IndependentSets, LexicographicAndBounded) {
    const auto sets = independent_sets(path3());
    EXPECT_EQ(sets, (std::vector<VertexList>{{}, {0}, {0, 2}, {1}, {2}}));
    const auto small = independent_sets(triangular(6), 1);
    EXPECT_EQ(small.size(), 16U);
}

TEST(IndependentSets, MatchBruteForceOnRandomGraphs) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(2 + trial % 13, 0.3, rng);
        std::vector<oracle::Set> ours;
        for (const auto& s : independent_sets(g)) ours.push_back(s);
        EXPECT_EQ(ours, oracle::all_independent_sets(adjacency_of(g)));
    }
}

TEST(MaximalIndependentSets, Examples) {
    EXPECT_EQ(maximal_independent_sets(complete(4)).size(), 4U);
    EXPECT_EQ(maximal_independent_sets(path3()), (std::vector<VertexList>{{0, 2}, {1}}));
    const auto t5 = maximal_independent_sets(triangular(5));
    EXPECT_EQ(t5.size(), 15U);
    for (const auto& s : t5) EXPECT_EQ(s.size(), 2U);
    EXPECT_EQ(maximal_independent_sets(edgeless(0)), (std::vector<VertexList>{{}}));
}

TEST(MaximalIndependentSets, MatchBruteForceOnRandomGraphs) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(1 + trial % 14, trial % 2 ? 0.5 : 0.2, rng);
        std::vector<oracle::Set> ours;
        for (const auto& s : maximal_independent_sets(g)) ours.push_back(s);
        EXPECT_EQ(ours, oracle::maximal_by_filter(adjacency_of(g))) << "trial " << trial;
    }
}

TEST(IndependenceNumber, Examples) {
    EXPECT_EQ(independence_number(triangular(9)), 4U);
    EXPECT_EQ(independence_number(triangular(11)), 5U);
    EXPECT_EQ(independence_number(complete(6)), 1U);
    EXPECT_EQ(independence_number(edgeless(4)), 4U);
}

TEST(Unmixed, Examples) {
    for (int n = 2; n <= 10; ++n) EXPECT_TRUE(is_unmixed(triangular(n))) << "n=" << n;
    EXPECT_FALSE(is_unmixed(path3()));
    EXPECT_TRUE(is_unmixed(complete(5)));
}

TEST(VertexCovers, Examples) {
    const auto k4 = minimal_vertex_covers(complete(4));
    EXPECT_EQ(k4, (std::vector<VertexList>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));

    // T_4 has three maximal independent sets (its perfect matchings), so three covers
    const auto t4 = minimal_vertex_covers(triangular(4));
    EXPECT_EQ(t4.size(), oracle::maximal_by_filter(oracle::triangular(4).adj).size());
    EXPECT_EQ(t4.size(), 3U);
    for (const auto& c : t4) EXPECT_EQ(c.size(), 4U);

    EXPECT_EQ(minimal_vertex_covers(edgeless(3)), (std::vector<VertexList>{{}}));
}

TEST(VertexCovers, AreMinimalAndComplementMaximalSets) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_graph(2 + trial % 11, 0.35, rng);
        const auto covers = minimal_vertex_covers(g);
        for (const auto& c : covers) {
            EXPECT_TRUE(is_vertex_cover(g, c));
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                VertexList smaller = c;
                smaller.erase(smaller.begin() + static_cast<long>(drop));
                EXPECT_FALSE(is_vertex_cover(g, smaller));
            }
        }
        std::vector<VertexList> complements;
        for (const auto& c : covers) {
            VertexList s;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (!std::binary_search(c.begin(), c.end(), v)) s.push_back(v);
            complements.push_back(s);
        }
        std::sort(complements.begin(), complements.end());
        EXPECT_EQ(complements, maximal_independent_sets(g));
    }
}

TEST(EdgeListFormat, ParsesLabelsInFirstAppearanceOrder) {
    std::istringstream in("# a path\nb a\n\na c\nd\n");
    const Graph g = read_edge_list(in);
    EXPECT_EQ(g.vertex_count(), 4U);
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"b", "a", "c", "d"}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_EQ(g.degree(3), 0U);
}

TEST(EdgeListFormat, RejectsMalformedLines) {
    std::istringstream three("a b c\n");
    EXPECT_THROW(read_edge_list(three), InputError);
    std::istringstream loop("a a\n");
    EXPECT_THROW(read_edge_list(loop), InputError);
}

TEST(EdgeListFormat, WriteThenReadPreservesGraph) {
    for (const Graph& g : {triangular(5), Graph(4, {{0, 3}}, {"w", "x", "y", "z"})}) {
        std::stringstream buf;
        write_edge_list(buf, g);
        EXPECT_EQ(read_edge_list(buf), g);
    }
}
