#include "tricm/graph.hpp"

#include <algorithm>
#include <functional>

namespace tricm {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)), adjacency_(vertex_count, VertexMask(vertex_count)) {
    if (!labels_.empty() && labels_.size() != vertex_count_)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= vertex_count_ || e.v >= vertex_count_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
        adjacency_[e.u].set(e.v);
        adjacency_[e.v].set(e.u);
    }
}

std::string Graph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

std::size_t pair_index(int n, int i, int j) {
    if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pair label out of range");
    // pairs with first element < i, then offset within row i
    std::size_t before = 0;
    for (int a = 1; a < i; ++a) before += static_cast<std::size_t>(n - a);
    return before + static_cast<std::size_t>(j - i - 1);
}

PairLabel pair_label(int n, std::size_t index) {
    for (int i = 1; i < n; ++i) {
        auto row = static_cast<std::size_t>(n - i);
        if (index < row) return {i, i + 1 + static_cast<int>(index)};
        index -= row;
    }
    throw std::invalid_argument("pair index out of range");
}

std::string pair_label_text(PairLabel p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

namespace {

std::vector<std::string> triangular_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) labels.push_back(pair_label_text({i, j}));
    return labels;
}

bool share_symbol(PairLabel a, PairLabel b) { return a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j; }

}  // namespace

Graph triangular(int n) {
    if (n < 2) throw std::invalid_argument("triangular graph needs n >= 2");
    const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<PairLabel> pairs;
    pairs.reserve(count);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b)
            if (share_symbol(pairs[a], pairs[b])) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    return Graph(count, std::move(edges), triangular_labels(n));
}

Graph triangular_recursive(int n) {
    if (n < 2) throw std::invalid_argument("triangular graph needs n >= 2");
    // Edge set kept in pair-label form while growing, then indexed once for T_n.
    std::vector<std::pair<PairLabel, PairLabel>> labeled;
    for (int m = 3; m <= n; ++m) {
        // clique K_{m-1} on (1 m), ..., (m-1 m)
        for (int a = 1; a < m; ++a)
            for (int b = a + 1; b < m; ++b) labeled.push_back({{a, m}, {b, m}});
        // join (i j) of T_{m-1} to (i m) and (j m)
        for (int i = 1; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                labeled.push_back({{i, j}, {i, m}});
                labeled.push_back({{i, j}, {j, m}});
            }
    }
    std::vector<Edge> edges;
    edges.reserve(labeled.size());
    for (const auto& [p, q] : labeled)
        edges.push_back({static_cast<Vertex>(pair_index(n, p.i, p.j)), static_cast<Vertex>(pair_index(n, q.i, q.j))});
    return Graph(static_cast<std::size_t>(n) * (n - 1) / 2, std::move(edges), triangular_labels(n));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs N >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph edgeless(std::size_t n) { return Graph(n, {}); }

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    const auto n = g.vertex_count();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.adjacent(a, b)) edges.push_back({a, b});
    return Graph(n, std::move(edges), g.labels());
}

bool is_independent(const Graph& g, const VertexList& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (g.adjacent(set[a], set[b])) return false;
    return true;
}

namespace {

// Depth-first over vertices in index order; `candidates` holds the vertices
// greater than the last chosen one that are non-adjacent to the whole prefix.
template <class Visit>
void enumerate_independent(const Graph& g, std::size_t max_size, Visit&& visit) {
    const std::size_t n = g.vertex_count();
    VertexList prefix;
    visit(prefix);
    if (max_size == 0 || n == 0) return;
    VertexMask all(n);
    all.set_all();
    std::function<void(const VertexMask&, std::size_t)> descend = [&](const VertexMask& candidates, std::size_t from) {
        for (std::size_t v = candidates.next(from); v < n; v = candidates.next(v + 1)) {
            prefix.push_back(static_cast<Vertex>(v));
            visit(prefix);
            if (prefix.size() < max_size) {
                VertexMask next = candidates;
                next.subtract(g.neighbors(static_cast<Vertex>(v)));
                descend(next, v + 1);
            }
            prefix.pop_back();
        }
    };
    descend(all, 0);
}

}  // namespace

std::vector<VertexList> independent_sets(const Graph& g, std::optional<std::size_t> max_size) {
    std::vector<VertexList> out;
    enumerate_independent(g, max_size.value_or(g.vertex_count()), [&](const VertexList& s) { out.push_back(s); });
    return out;
}

std::vector<std::size_t> independent_set_counts(const Graph& g) {
    std::vector<std::size_t> counts;
    enumerate_independent(g, g.vertex_count(), [&](const VertexList& s) {
        if (counts.size() <= s.size()) counts.resize(s.size() + 1, 0);
        ++counts[s.size()];
    });
    return counts;
}

std::vector<VertexList> maximal_independent_sets(const Graph& g) {
    // Bron-Kerbosch with pivoting on the complement: a vertex extends R iff it
    // is non-adjacent to every member of R.
    const std::size_t n = g.vertex_count();
    std::vector<VertexList> out;
    VertexList current;
    std::function<void(VertexMask, VertexMask)> expand = [&](VertexMask cand, VertexMask excluded) {
        if (cand.none() && excluded.none()) {
            VertexList s = current;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        // pivot maximizing |cand \ N[u]|-complement, i.e. the vertex whose
        // non-neighbourhood covers most candidates
        std::size_t pivot = n;
        std::size_t best = 0;
        for (auto* set : {&cand, &excluded})
            for (std::size_t u = set->next(0); u < n; u = set->next(u + 1)) {
                VertexMask keep = cand;
                keep &= g.neighbors(static_cast<Vertex>(u));
                // candidates adjacent to u are the ones we must still branch on
                std::size_t score = cand.count() - keep.count();
                if (pivot == n || score > best) {
                    pivot = u;
                    best = score;
                }
            }
        // branch on pivot and on candidates adjacent to it
        VertexMask branch = cand;
        branch &= g.neighbors(static_cast<Vertex>(pivot));
        if (cand.test(pivot)) branch.set(pivot);
        for (std::size_t v = branch.next(0); v < n; v = branch.next(v + 1)) {
            VertexMask nc = cand;
            nc.subtract(g.neighbors(static_cast<Vertex>(v)));
            nc.reset(v);
            VertexMask nx = excluded;
            nx.subtract(g.neighbors(static_cast<Vertex>(v)));
            nx.reset(v);
            current.push_back(static_cast<Vertex>(v));
            expand(std::move(nc), std::move(nx));
            current.pop_back();
            cand.reset(v);
            excluded.set(v);
        }
    };
    VertexMask all(n);
    all.set_all();
    expand(all, VertexMask(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t independence_number(const Graph& g) { return independent_set_counts(g).size() - 1; }

bool is_unmixed(const Graph& g) {
    const auto sets = maximal_independent_sets(g);
    return std::all_of(sets.begin(), sets.end(), [&](const VertexList& s) { return s.size() == sets.front().size(); });
}

std::vector<VertexList> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexList> covers;
    for (const auto& s : maximal_independent_sets(g)) {
        VertexList c;
        std::size_t k = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (k < s.size() && s[k] == v) {
                ++k;
                continue;
            }
            c.push_back(v);
        }
        covers.push_back(std::move(c));
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

bool is_vertex_cover(const Graph& g, const VertexList& set) {
    VertexMask in(g.vertex_count());
    for (auto v : set) in.set(v);
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return in.test(e.u) || in.test(e.v); });
}

}  // namespace tricm
