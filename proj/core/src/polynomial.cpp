#include "tricm/polynomial.hpp"

#include <stdexcept>

namespace tricm {

Polynomial Polynomial::variable(std::size_t variables, std::size_t index, std::uint16_t power) {
    if (index >= variables) throw std::invalid_argument("variable index out of range");
    Polynomial p(variables);
    Exponent e(variables, 0);
    e[index] = power;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::constant(std::size_t variables, const BigInt& c) {
    Polynomial p(variables);
    p.add_term(Exponent(variables, 0), c);
    return p;
}

Polynomial Polynomial::elementary_symmetric(std::size_t variables, std::size_t k) {
    Polynomial p(variables);
    if (k > variables) return p;
    // walk all k-subsets via a selection mask in lexicographic order
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Exponent e(variables, 0);
        for (auto v : pick) e[v] = 1;
        p.add_term(e, 1);
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == variables - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return p;
}

void Polynomial::add_term(const Exponent& e, const BigInt& c) {
    if (e.size() != variables_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.variables_ != variables_) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.variables_ != variables_) throw std::invalid_argument("polynomial ring mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.variables_ != b.variables_) throw std::invalid_argument("polynomial ring mismatch");
    Polynomial out(a.variables_);
    Polynomial::Exponent e(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
            out.add_term(e, ca * cb);
        }
    return out;
}

}  // namespace tricm
