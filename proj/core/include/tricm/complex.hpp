#pragma once

#include "tricm/bigint.hpp"
#include "tricm/graph.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tricm {

/// A face is a strictly increasing list of vertex indices.
using Face = VertexList;

/// Finite abstract simplicial complex on the ambient vertex set
/// {0, ..., vertex_count-1}, stored fully enumerated by dimension.
///
/// Two degenerate complexes are distinguished: the void complex, which has no
/// faces at all, and {∅}, which has only the empty face and dimension -1.
/// Faces within a dimension are sorted lexicographically.
class SimplicialComplex {
public:
    /// The void complex.
    SimplicialComplex() = default;
    static SimplicialComplex void_complex(std::size_t vertex_count = 0);
    /// The complex {∅}.
    static SimplicialComplex empty_face_only(std::size_t vertex_count = 0);
    /// Subset closure of `generators`; every generator must be a strictly
    /// increasing list of indices < vertex_count. An empty generator list
    /// yields {∅}.
    static SimplicialComplex from_generators(std::size_t vertex_count, std::vector<Face> generators);
    /// Adopts `faces_by_size[k]` (faces with k vertices, k >= 1) which the
    /// caller guarantees are sorted, distinct and subset closed.
    static SimplicialComplex from_closed_faces(std::size_t vertex_count, std::vector<std::vector<Face>> faces_by_size);

    bool is_void() const noexcept { return !nonvoid_; }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    /// -1 for {∅}. Throws std::invalid_argument on the void complex.
    int dimension() const;

    /// Faces of dimension `dim` (dim >= -1). Empty for out-of-range dims.
    const std::vector<Face>& faces(int dim) const;
    std::size_t face_count(int dim) const { return faces(dim).size(); }
    std::size_t total_faces() const;

    /// Position of `face` within faces(face.size() - 1), or npos.
    std::size_t index_of(const Face& face) const;
    bool contains(const Face& face) const { return index_of(face) != npos; }

    /// Faces not strictly contained in another face.
    std::vector<Face> facets() const;
    /// Vertices v with {v} a face.
    VertexList vertices() const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t vertex_count_ = 0;
    bool nonvoid_ = false;
    // by_size_[k] holds faces with k vertices; by_size_[0] = {∅} when nonvoid
    std::vector<std::vector<Face>> by_size_;
};

/// Face counts (f_{-1}, f_0, ..., f_d).
struct FVector {
    std::vector<BigInt> entries;

    int dimension() const { return static_cast<int>(entries.size()) - 2; }
    /// f_i for i >= -1.
    const BigInt& at(int i) const { return entries.at(static_cast<std::size_t>(i + 1)); }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_{d+1}); entries may be negative.
struct HVector {
    std::vector<BigInt> entries;
    friend bool operator==(const HVector&, const HVector&) = default;
};

SimplicialComplex independence_complex(const Graph& g);
SimplicialComplex clique_complex(const Graph& g);
/// Δ(n), the independence complex of T_n; the void complex for n < 2.
SimplicialComplex triangular_complex(int n);

/// Throws std::invalid_argument on the void complex.
FVector f_vector(const SimplicialComplex& c);
HVector h_vector(const FVector& f);
/// Face counts of Δ(n) from n! / (2^{i+1} (i+1)! (n-2(i+1))!).
FVector triangular_f_closed(int n);

/// Reduced Euler characteristic -f_{-1} + f_0 - f_1 + ...
BigInt reduced_euler_characteristic(const FVector& f);

/// {H : H ∩ F = ∅, H ∪ F ∈ c} on the same ambient vertex set. Throws
/// std::invalid_argument when `face` is not a face of c.
SimplicialComplex link(const SimplicialComplex& c, const Face& face);

/// Order-preserving bijection (link vertex of Δ(n) → vertex of Δ(n-2m))
/// identifying lk_{Δ(n)}(face) with Δ(n-2m), m = |face|. The map sends the
/// pair (a_s, a_t) over the unused symbols a_1 < ... < a_{n-2m} to (s, t).
/// Throws std::invalid_argument when `face` is not independent in T_n.
std::vector<std::pair<Vertex, Vertex>> link_triangular_witness(int n, const Face& face);

/// Applies a vertex map to every face; vertices outside the map are an error.
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<std::pair<Vertex, Vertex>>& map,
                          std::size_t new_vertex_count);

/// Renumbers the vertices of c onto 0..k-1 preserving order.
SimplicialComplex compress(const SimplicialComplex& c);

/// Number of connected components of the 1-skeleton over the vertices of c.
std::size_t component_count(const SimplicialComplex& c);
/// True iff the 1-skeleton has exactly one component. Throws on void.
bool is_connected(const SimplicialComplex& c);

/// Text format: header "dim <d> vertices <N>", then one face per line as
/// space-separated indices. Input faces are closed under subsets on read.
void write_complex(std::ostream& out, const SimplicialComplex& c);
SimplicialComplex read_complex(std::istream& in);

}  // namespace tricm
