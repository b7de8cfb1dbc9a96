#pragma once

// Brute-force reference computations used only by tests. None of these call
// into the library's enumeration or elimination code paths.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::vector<std::uint32_t>;

/// T_n as an explicit pair list plus adjacency matrix, pairs in lexicographic order.
struct PairGraph {
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<bool>> adj;
};

inline PairGraph triangular(int n) {
    PairGraph g;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.pairs.emplace_back(i, j);
    const auto v = g.pairs.size();
    g.adj.assign(v, std::vector<bool>(v, false));
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b) {
            if (a == b) continue;
            auto [i, j] = g.pairs[a];
            auto [k, l] = g.pairs[b];
            g.adj[a][b] = (i == k || i == l || j == k || j == l);
        }
    return g;
}

inline bool independent(const std::vector<std::vector<bool>>& adj, const Set& s) {
    for (auto a : s)
        for (auto b : s)
            if (a != b && adj[a][b]) return false;
    return true;
}

/// Every independent set, found by testing all 2^N subsets (N <= 24).
inline std::vector<Set> all_independent_sets(const std::vector<std::vector<bool>>& adj) {
    const auto n = adj.size();
    std::vector<Set> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Set s;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1U) s.push_back(static_cast<std::uint32_t>(v));
        if (independent(adj, s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Independent sets grown level by level (works for larger N than subset masks).
inline std::vector<std::set<Set>> independent_sets_by_size(const std::vector<std::vector<bool>>& adj) {
    const auto n = adj.size();
    std::vector<std::set<Set>> levels(1);
    levels[0].insert(Set{});
    while (true) {
        std::set<Set> next;
        for (const auto& s : levels.back())
            for (std::uint32_t v = s.empty() ? 0 : s.back() + 1; v < n; ++v) {
                bool ok = true;
                for (auto u : s) ok = ok && !adj[u][v];
                if (ok) {
                    Set t = s;
                    t.push_back(v);
                    next.insert(t);
                }
            }
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }
    return levels;
}

inline std::vector<Set> maximal_by_filter(const std::vector<std::vector<bool>>& adj) {
    const auto sets = all_independent_sets(adj);
    std::vector<Set> out;
    for (const auto& s : sets) {
        bool maximal = true;
        for (std::uint32_t v = 0; v < adj.size() && maximal; ++v) {
            if (std::find(s.begin(), s.end(), v) != s.end()) continue;
            Set t = s;
            t.push_back(v);
            std::sort(t.begin(), t.end());
            if (independent(adj, t)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

/// Rank by Gauss-Jordan elimination over Q with mpq_class entries.
inline std::size_t rank_rational(std::vector<std::vector<mpq_class>> a) {
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const mpq_class f = a[i][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Rank over F_p of an integer matrix.
inline std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
    auto norm = [p](long long x) { return ((x % p) + p) % p; };
    auto inv = [&](long long x) {
        long long r = 1, b = norm(x), e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = norm(x);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t q = rank;
        while (q < rows && a[q][c] == 0) ++q;
        if (q == rows) continue;
        std::swap(a[q], a[rank]);
        const long long iv = inv(a[rank][c]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const long long f = a[i][c] * iv % p;
            for (std::size_t k = c; k < cols; ++k) a[i][k] = norm(a[i][k] - f * a[rank][k]);
        }
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers from a face list (every face, sorted sets, including
/// the empty face) by dense boundary matrices built here from scratch.
/// p == 0 means Q.
inline std::vector<std::size_t> reduced_betti(const std::vector<Set>& faces, long long p) {
    std::size_t top = 0;
    for (const auto& f : faces) top = std::max(top, f.size());
    std::vector<std::vector<Set>> by_size(top + 1);
    for (const auto& f : faces) by_size[f.size()].push_back(f);
    for (auto& l : by_size) std::sort(l.begin(), l.end());
    // rank of ∂ from size k to size k-1, k = 1..top
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
        const auto& lo = by_size[k - 1];
        const auto& hi = by_size[k];
        std::vector<std::vector<long long>> m(lo.size(), std::vector<long long>(hi.size(), 0));
        for (std::size_t j = 0; j < hi.size(); ++j)
            for (std::size_t drop = 0; drop < hi[j].size(); ++drop) {
                Set t = hi[j];
                t.erase(t.begin() + static_cast<long>(drop));
                const auto row = static_cast<std::size_t>(std::lower_bound(lo.begin(), lo.end(), t) - lo.begin());
                m[row][j] = (drop % 2) ? -1 : 1;
            }
        if (p == 0) {
            std::vector<std::vector<mpq_class>> q(m.size(), std::vector<mpq_class>(hi.size()));
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < hi.size(); ++j) q[i][j] = static_cast<long>(m[i][j]);
            rk[k] = rank_rational(q);
        } else {
            rk[k] = rank_mod(m, p);
        }
    }
    std::vector<std::size_t> betti;
    for (std::size_t k = 0; k <= top; ++k) betti.push_back(by_size[k].size() - rk[k] - rk[k + 1]);
    return betti;  // betti[k] = dim H̃_{k-1}
}

}  // namespace oracle
