#pragma once

#include "tricm/vertex_mask.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tricm {

using Vertex = std::uint32_t;
/// Sorted list of vertex indices.
using VertexList = std::vector<Vertex>;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The 2-subset {i, j} of {1..n} naming a vertex of T_n; 1 <= i < j <= n.
struct PairLabel {
    int i;
    int j;
    friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
};

/// Raised for malformed external input (edge lists, complex files).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph. Edges are stored with u < v, deduplicated and
/// sorted; adjacency masks are derived on construction.
class Graph {
public:
    Graph() = default;
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Duplicate edges (in either orientation) are merged.
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    /// Label of v, or its decimal index when the graph is unlabeled.
    std::string label(Vertex v) const;

    const VertexMask& neighbors(Vertex v) const { return adjacency_[v]; }
    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
    std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<VertexMask> adjacency_;
};

// -- triangular graphs -------------------------------------------------------

/// Index of the pair (i, j) in lexicographic order over 1 <= i < j <= n.
std::size_t pair_index(int n, int i, int j);
PairLabel pair_label(int n, std::size_t index);
std::string pair_label_text(PairLabel p);

/// T_n: vertices are the 2-subsets of {1..n}, adjacent iff they intersect.
Graph triangular(int n);
/// T_n grown from T_{n-1} by adding the clique on (1 n)..(n-1 n) and joining
/// each (i j) to (i n) and (j n). Produces a graph equal to triangular(n).
Graph triangular_recursive(int n);

Graph complete(int n);
Graph edgeless(std::size_t n);
Graph complement(const Graph& g);

// -- independent sets --------------------------------------------------------

bool is_independent(const Graph& g, const VertexList& set);

/// All independent sets of size <= max_size (every size when absent),
/// including the empty set, in lexicographic order.
std::vector<VertexList> independent_sets(const Graph& g, std::optional<std::size_t> max_size = std::nullopt);

/// Number of independent sets of each cardinality 0..alpha(G).
std::vector<std::size_t> independent_set_counts(const Graph& g);

/// Inclusion-maximal independent sets, lexicographically sorted.
std::vector<VertexList> maximal_independent_sets(const Graph& g);

std::size_t independence_number(const Graph& g);

/// True iff every maximal independent set has the same cardinality.
bool is_unmixed(const Graph& g);

/// Complements of the maximal independent sets; these generate the minimal
/// primes of the edge ideal.
std::vector<VertexList> minimal_vertex_covers(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexList& set);

// -- edge-list text format ---------------------------------------------------

/// Reads "u v" lines of whitespace-separated labels. A single label on a line
/// declares an isolated vertex; '#' lines and blank lines are skipped. Labels
/// map to indices in order of first appearance. Throws InputError.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tricm
