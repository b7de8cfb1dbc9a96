#include "tricm/rank.hpp"

#include "tricm/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace tricm {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 result = 1;
    base %= p;
    while (exp) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

u64 inverse_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

// -- modular -----------------------------------------------------------------

using ModEntry = std::pair<std::uint32_t, std::uint32_t>;
using ModColumn = std::vector<ModEntry>;

// target <- target - factor * pivot, both sorted by row.
void axpy_mod(ModColumn& target, const ModColumn& pivot, u64 factor, u64 p, ModColumn& scratch) {
    scratch.clear();
    auto a = target.begin();
    auto b = pivot.begin();
    const u64 neg = (p - factor) % p;
    while (a != target.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
            scratch.push_back(*a++);
        } else if (a == target.end() || b->first < a->first) {
            scratch.emplace_back(b->first, static_cast<std::uint32_t>(neg * b->second % p));
            ++b;
        } else {
            const u64 v = (a->second + neg * b->second) % p;
            if (v) scratch.emplace_back(a->first, static_cast<std::uint32_t>(v));
            ++a;
            ++b;
        }
    }
    target.swap(scratch);
}

std::size_t rank_mod_p_dense(const SparseMatrix& m, u64 p) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // row-major copy, columns become the elimination direction
    std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (auto [r, v] : m.column(j)) {
            const auto mod = static_cast<std::int64_t>(p);
            a[r][j] = static_cast<std::uint32_t>(((v % mod) + mod) % mod);
        }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const u64 inv = inverse_mod(a[rank][c], p);
        for (std::size_t k = c; k < cols; ++k) a[rank][k] = static_cast<std::uint32_t>(a[rank][k] * inv % p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const u64 f = a[i][c];
            if (!f) continue;
            const u64 neg = p - f;
            auto& row = a[i];
            const auto& prow = a[rank];
            for (std::size_t k = c; k < cols; ++k)
                if (prow[k]) row[k] = static_cast<std::uint32_t>((row[k] + neg * prow[k]) % p);
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_mod_p_sparse(const SparseMatrix& m, u64 p) {
    std::vector<ModColumn> pivot_at(m.rows());
    std::size_t rank = 0;
    ModColumn work;
    ModColumn scratch;
    const auto mod = static_cast<std::int64_t>(p);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        work.clear();
        for (auto [r, v] : m.column(j)) {
            const auto w = static_cast<std::uint32_t>(((v % mod) + mod) % mod);
            if (w) work.emplace_back(r, w);
        }
        while (!work.empty()) {
            const auto [low, value] = work.back();
            auto& pivot = pivot_at[low];
            if (pivot.empty()) {
                const u64 inv = inverse_mod(value, p);
                for (auto& e : work) e.second = static_cast<std::uint32_t>(e.second * inv % p);
                pivot = std::move(work);
                work = ModColumn();
                ++rank;
                break;
            }
            axpy_mod(work, pivot, value, p, scratch);
        }
    }
    return rank;
}

// -- rational ----------------------------------------------------------------

using BigEntry = std::pair<std::uint32_t, BigInt>;
using BigColumn = std::vector<BigEntry>;

void make_primitive(BigColumn& col) {
    BigInt g = 0;
    for (const auto& e : col) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& e : col) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

// target <- a * target - b * pivot
void combine(BigColumn& target, const BigColumn& pivot, const BigInt& a, const BigInt& b, BigColumn& scratch) {
    scratch.clear();
    auto x = target.begin();
    auto y = pivot.begin();
    const bool unit_a = (a == 1);
    while (x != target.end() || y != pivot.end()) {
        if (y == pivot.end() || (x != target.end() && x->first < y->first)) {
            scratch.emplace_back(x->first, unit_a ? x->second : BigInt(a * x->second));
            ++x;
        } else if (x == target.end() || y->first < x->first) {
            scratch.emplace_back(y->first, -b * y->second);
            ++y;
        } else {
            BigInt v = unit_a ? BigInt(x->second) : BigInt(a * x->second);
            v -= b * y->second;
            if (v != 0) scratch.emplace_back(x->first, std::move(v));
            ++x;
            ++y;
        }
    }
    target.swap(scratch);
}

std::size_t rank_rational_sparse(const SparseMatrix& m) {
    std::vector<BigColumn> pivot_at(m.rows());
    std::size_t rank = 0;
    BigColumn work;
    BigColumn scratch;
    BigInt a;
    BigInt b;
    BigInt g;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        work.clear();
        for (auto [r, v] : m.column(j)) work.emplace_back(r, BigInt(static_cast<long>(v)));
        make_primitive(work);
        while (!work.empty()) {
            const auto low = work.back().first;
            auto& pivot = pivot_at[low];
            if (pivot.empty()) {
                pivot = std::move(work);
                work = BigColumn();
                ++rank;
                break;
            }
            // cancel the low entries with the smallest integer multipliers
            mpz_gcd(g.get_mpz_t(), pivot.back().second.get_mpz_t(), work.back().second.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), pivot.back().second.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), work.back().second.get_mpz_t(), g.get_mpz_t());
            combine(work, pivot, a, b, scratch);
            if (a != 1) make_primitive(work);
        }
    }
    return rank;
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: modulus is not prime");
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.density() > kDenseThreshold) return rank_mod_p_dense(m, p);
    return rank_mod_p_sparse(m, p);
}

std::size_t rank_bareiss_dense(const SparseMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j)
        for (auto [r, v] : m.column(j)) a[r][j] = static_cast<long>(v);
    BigInt previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        const BigInt& p = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                BigInt v = p * a[i][k] - a[i][c] * a[rank][k];
                mpz_divexact(a[i][k].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
            }
            a[i][c] = 0;
        }
        previous = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_rational(const SparseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.density() > kDenseThreshold) return rank_bareiss_dense(m);
    return rank_rational_sparse(m);
}

std::size_t rank_multimodular(const SparseMatrix& m, std::span<const std::uint32_t> primes) {
    std::size_t best = 0;
    for (auto p : primes) best = std::max(best, rank_mod_p(m, p));
    return best;
}

std::size_t rank(const SparseMatrix& m, FieldSpec field, RationalRankMode mode) {
    if (!field.is_rational()) return rank_mod_p(m, field.characteristic());
    return mode == RationalRankMode::exact ? rank_rational(m) : rank_multimodular(m);
}

}  // namespace tricm
