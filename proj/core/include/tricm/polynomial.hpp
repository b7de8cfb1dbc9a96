#pragma once

#include "tricm/bigint.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tricm {

/// Sparse multivariate polynomial with integer coefficients, keyed by dense
/// exponent vectors. Zero terms are never stored.
class Polynomial {
public:
    using Exponent = std::vector<std::uint16_t>;

    Polynomial() = default;
    explicit Polynomial(std::size_t variables) : variables_(variables) {}

    static Polynomial variable(std::size_t variables, std::size_t index, std::uint16_t power = 1);
    static Polynomial constant(std::size_t variables, const BigInt& c);
    /// σ_k(z_0, ..., z_{variables-1}).
    static Polynomial elementary_symmetric(std::size_t variables, std::size_t k);

    std::size_t variables() const noexcept { return variables_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }

    void add_term(const Exponent& e, const BigInt& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t variables_ = 0;
    std::map<Exponent, BigInt> terms_;
};

}  // namespace tricm
