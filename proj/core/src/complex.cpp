#include "tricm/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tricm {

namespace {

const std::vector<Face>& no_faces() {
    static const std::vector<Face> empty;
    return empty;
}

void check_face(std::size_t vertex_count, const Face& f) {
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] >= vertex_count) throw std::invalid_argument("face vertex out of range");
        if (k > 0 && f[k - 1] >= f[k]) throw std::invalid_argument("face is not strictly increasing");
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(std::size_t vertex_count) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    return c;
}

SimplicialComplex SimplicialComplex::empty_face_only(std::size_t vertex_count) {
    return from_closed_faces(vertex_count, {});
}

SimplicialComplex SimplicialComplex::from_closed_faces(std::size_t vertex_count,
                                                        std::vector<std::vector<Face>> faces_by_size) {
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    c.nonvoid_ = true;
    if (faces_by_size.empty()) faces_by_size.emplace_back();
    faces_by_size[0] = {Face{}};
    while (faces_by_size.size() > 1 && faces_by_size.back().empty()) faces_by_size.pop_back();
    c.by_size_ = std::move(faces_by_size);
    return c;
}

SimplicialComplex SimplicialComplex::from_generators(std::size_t vertex_count, std::vector<Face> generators) {
    std::vector<std::set<Face>> sets(1);
    for (const auto& g : generators) {
        check_face(vertex_count, g);
        if (g.size() >= 32) throw std::invalid_argument("generator too large to close under subsets");
        if (sets.size() <= g.size()) sets.resize(g.size() + 1);
        const std::uint64_t subsets = std::uint64_t{1} << g.size();
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            Face f;
            for (std::size_t k = 0; k < g.size(); ++k)
                if ((mask >> k) & 1U) f.push_back(g[k]);
            sets[f.size()].insert(std::move(f));
        }
    }
    std::vector<std::vector<Face>> by_size(sets.size());
    for (std::size_t k = 1; k < sets.size(); ++k) by_size[k].assign(sets[k].begin(), sets[k].end());
    return from_closed_faces(vertex_count, std::move(by_size));
}

int SimplicialComplex::dimension() const {
    if (!nonvoid_) throw std::invalid_argument("the void complex has no dimension");
    return static_cast<int>(by_size_.size()) - 2;
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
    if (!nonvoid_ || dim < -1) return no_faces();
    const auto size = static_cast<std::size_t>(dim + 1);
    return size < by_size_.size() ? by_size_[size] : no_faces();
}

std::size_t SimplicialComplex::total_faces() const {
    std::size_t total = 0;
    for (const auto& level : by_size_) total += level.size();
    return total;
}

std::size_t SimplicialComplex::index_of(const Face& face) const {
    if (!nonvoid_ || face.size() >= by_size_.size()) return npos;
    const auto& level = by_size_[face.size()];
    auto it = std::lower_bound(level.begin(), level.end(), face);
    if (it == level.end() || *it != face) return npos;
    return static_cast<std::size_t>(it - level.begin());
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    if (!nonvoid_) return out;
    for (std::size_t k = 0; k < by_size_.size(); ++k) {
        std::set<Face> covered;
        if (k + 1 < by_size_.size())
            for (const auto& big : by_size_[k + 1])
                for (std::size_t drop = 0; drop < big.size(); ++drop) {
                    Face f = big;
                    f.erase(f.begin() + static_cast<std::ptrdiff_t>(drop));
                    covered.insert(std::move(f));
                }
        for (const auto& f : by_size_[k])
            if (!covered.count(f)) out.push_back(f);
    }
    return out;
}

VertexList SimplicialComplex::vertices() const {
    VertexList out;
    for (const auto& f : faces(0)) out.push_back(f.front());
    return out;
}

namespace {

SimplicialComplex complex_from_sets(std::size_t vertex_count, const std::vector<VertexList>& sets) {
    std::vector<std::vector<Face>> by_size;
    for (const auto& s : sets) {
        if (by_size.size() <= s.size()) by_size.resize(s.size() + 1);
        by_size[s.size()].push_back(s);
    }
    for (auto& level : by_size) std::sort(level.begin(), level.end());
    return SimplicialComplex::from_closed_faces(vertex_count, std::move(by_size));
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g) {
    return complex_from_sets(g.vertex_count(), independent_sets(g));
}

SimplicialComplex clique_complex(const Graph& g) { return independence_complex(complement(g)); }

SimplicialComplex triangular_complex(int n) {
    if (n < 2) return SimplicialComplex::void_complex();
    return independence_complex(triangular(n));
}

FVector f_vector(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("f-vector of the void complex");
    FVector f;
    for (int d = -1; d <= c.dimension(); ++d) f.entries.emplace_back(static_cast<unsigned long>(c.face_count(d)));
    return f;
}

HVector h_vector(const FVector& f) {
    if (f.entries.empty()) throw std::invalid_argument("empty f-vector");
    const int d = f.dimension();
    HVector h;
    for (int k = 0; k <= d + 1; ++k) {
        BigInt hk = 0;
        for (int i = 0; i <= k; ++i) {
            BigInt term = binomial(static_cast<std::uint64_t>(d + 1 - i), static_cast<std::uint64_t>(k - i)) * f.at(i - 1);
            if ((k - i) % 2) hk -= term;
            else hk += term;
        }
        h.entries.push_back(hk);
    }
    return h;
}

FVector triangular_f_closed(int n) {
    if (n < 2) throw std::invalid_argument("closed-form f-vector needs n >= 2");
    FVector f;
    f.entries.emplace_back(1);
    const BigInt nf = factorial(static_cast<std::uint64_t>(n));
    for (int i = 0; 2 * (i + 1) <= n; ++i) {
        BigInt denom = factorial(static_cast<std::uint64_t>(i + 1)) * factorial(static_cast<std::uint64_t>(n - 2 * (i + 1)));
        denom <<= static_cast<mp_bitcnt_t>(i + 1);
        f.entries.push_back(nf / denom);
    }
    return f;
}

BigInt reduced_euler_characteristic(const FVector& f) {
    BigInt chi = 0;
    for (int i = -1; i <= f.dimension(); ++i) {
        if ((i + 2) % 2 == 0) chi += f.at(i);
        else chi -= f.at(i);
    }
    return chi;
}

SimplicialComplex link(const SimplicialComplex& c, const Face& face) {
    if (!c.contains(face)) throw std::invalid_argument("link: not a face of the complex");
    const std::size_t m = face.size();
    std::vector<std::vector<Face>> by_size;
    for (int dim = static_cast<int>(m) - 1; dim <= c.dimension(); ++dim) {
        for (const auto& g : c.faces(dim)) {
            if (!std::includes(g.begin(), g.end(), face.begin(), face.end())) continue;
            Face h;
            std::set_difference(g.begin(), g.end(), face.begin(), face.end(), std::back_inserter(h));
            if (by_size.size() <= h.size()) by_size.resize(h.size() + 1);
            by_size[h.size()].push_back(std::move(h));
        }
    }
    for (auto& level : by_size) std::sort(level.begin(), level.end());
    return SimplicialComplex::from_closed_faces(c.vertex_count(), std::move(by_size));
}

std::vector<std::pair<Vertex, Vertex>> link_triangular_witness(int n, const Face& face) {
    if (n < 2) throw std::invalid_argument("link witness needs n >= 2");
    const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t k = 0; k < face.size(); ++k) {
        if (face[k] >= count || (k > 0 && face[k - 1] >= face[k]))
            throw std::invalid_argument("link witness: malformed face");
        const PairLabel p = pair_label(n, face[k]);
        if (used[static_cast<std::size_t>(p.i)] || used[static_cast<std::size_t>(p.j)])
            throw std::invalid_argument("link witness: face is not independent in T_n");
        used[static_cast<std::size_t>(p.i)] = used[static_cast<std::size_t>(p.j)] = true;
    }
    std::vector<int> symbols;
    for (int a = 1; a <= n; ++a)
        if (!used[static_cast<std::size_t>(a)]) symbols.push_back(a);
    const int reduced = static_cast<int>(symbols.size());
    std::vector<std::pair<Vertex, Vertex>> map;
    for (int s = 0; s < reduced; ++s)
        for (int t = s + 1; t < reduced; ++t)
            map.emplace_back(static_cast<Vertex>(pair_index(n, symbols[s], symbols[t])),
                             static_cast<Vertex>(pair_index(reduced, s + 1, t + 1)));
    return map;
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<std::pair<Vertex, Vertex>>& map,
                          std::size_t new_vertex_count) {
    if (c.is_void()) return SimplicialComplex::void_complex(new_vertex_count);
    constexpr Vertex unmapped = static_cast<Vertex>(-1);
    std::vector<Vertex> table(c.vertex_count(), unmapped);
    for (auto [from, to] : map) {
        if (from >= c.vertex_count() || to >= new_vertex_count) throw std::invalid_argument("relabel: index out of range");
        table[from] = to;
    }
    std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(c.dimension() + 2));
    for (int d = 0; d <= c.dimension(); ++d) {
        auto& level = by_size[static_cast<std::size_t>(d + 1)];
        for (const auto& f : c.faces(d)) {
            Face g;
            for (auto v : f) {
                if (table[v] == unmapped) throw std::invalid_argument("relabel: vertex missing from map");
                g.push_back(table[v]);
            }
            std::sort(g.begin(), g.end());
            level.push_back(std::move(g));
        }
        std::sort(level.begin(), level.end());
    }
    return SimplicialComplex::from_closed_faces(new_vertex_count, std::move(by_size));
}

SimplicialComplex compress(const SimplicialComplex& c) {
    if (c.is_void()) return SimplicialComplex::void_complex();
    const auto verts = c.vertices();
    std::vector<std::pair<Vertex, Vertex>> map;
    for (std::size_t k = 0; k < verts.size(); ++k) map.emplace_back(verts[k], static_cast<Vertex>(k));
    return relabel(c, map, verts.size());
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::size_t component_count(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("components of the void complex");
    DisjointSets sets(c.vertex_count());
    std::size_t components = c.face_count(0);
    for (const auto& e : c.faces(1))
        if (sets.unite(e[0], e[1])) --components;
    return components;
}

bool is_connected(const SimplicialComplex& c) { return component_count(c) == 1; }

}  // namespace tricm
